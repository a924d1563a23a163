#ifndef BHCUT_BHCUT_HPP
#define BHCUT_BHCUT_HPP

#include "bhcut/cuts.hpp"
#include "bhcut/error.hpp"
#include "bhcut/io.hpp"
#include "bhcut/patterns.hpp"
#include "bhcut/properties.hpp"
#include "bhcut/search.hpp"
#include "bhcut/topology.hpp"

#endif  // BHCUT_BHCUT_HPP
