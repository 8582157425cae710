#pragma once

#define ENTROGRAPH_VERSION "0.1.0"

#include "entrograph/anomaly.hpp"
#include "entrograph/community.hpp"
#include "entrograph/eigen_solver.hpp"
#include "entrograph/entropy.hpp"
#include "entrograph/error.hpp"
#include "entrograph/generators.hpp"
#include "entrograph/graph.hpp"
#include "entrograph/io.hpp"
#include "entrograph/kmeans.hpp"
#include "entrograph/laplacian.hpp"
#include "entrograph/majorization.hpp"
#include "entrograph/netdesign.hpp"
#include "entrograph/parallel.hpp"
#include "entrograph/partition.hpp"
#include "entrograph/random.hpp"
#include "entrograph/similarity.hpp"
#include "entrograph/spectral.hpp"
#include "entrograph/stream.hpp"
