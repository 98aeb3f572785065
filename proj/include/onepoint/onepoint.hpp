#pragma once

#include "onepoint/compactify.hpp"
#include "onepoint/connectify.hpp"
#include "onepoint/corpus.hpp"
#include "onepoint/error.hpp"
#include "onepoint/finite_topology.hpp"
#include "onepoint/interval_set.hpp"
#include "onepoint/random.hpp"
#include "onepoint/rational.hpp"
#include "onepoint/records.hpp"
#include "onepoint/selftest.hpp"
#include "onepoint/space.hpp"
