// Umbrella header.

#ifndef KPOLY_KPOLY_HPP_
#define KPOLY_KPOLY_HPP_

#include "kpoly/composition.hpp"
#include "kpoly/expand.hpp"
#include "kpoly/expansion.hpp"
#include "kpoly/families.hpp"
#include "kpoly/glides.hpp"
#include "kpoly/kohnert.hpp"
#include "kpoly/polynomial.hpp"
#include "kpoly/scan.hpp"
#include "kpoly/skylines.hpp"
#include "kpoly/verify.hpp"
#include "kpoly/zbeta.hpp"

#endif  // KPOLY_KPOLY_HPP_
