#pragma once

#include "weyl_ising/error.hpp"
#include "weyl_ising/rational.hpp"
#include "weyl_ising/matrix.hpp"
#include "weyl_ising/hnf.hpp"
#include "weyl_ising/rootsys.hpp"
#include "weyl_ising/lattice.hpp"
#include "weyl_ising/cyclotomic.hpp"
#include "weyl_ising/cocycle.hpp"
#include "weyl_ising/voa2.hpp"
#include "weyl_ising/axes.hpp"
#include "weyl_ising/permgrp.hpp"
#include "weyl_ising/triality.hpp"
#include "weyl_ising/acceptance.hpp"
