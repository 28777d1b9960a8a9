#ifndef WRHERMITE_WRHERMITE_HPP
#define WRHERMITE_WRHERMITE_HPP

#include "wrhermite/bigint.hpp"
#include "wrhermite/bounds.hpp"
#include "wrhermite/characters.hpp"
#include "wrhermite/construct.hpp"
#include "wrhermite/partition.hpp"
#include "wrhermite/poly.hpp"
#include "wrhermite/roots.hpp"

#endif
