#ifndef EPLS_EPLS_HPP
#define EPLS_EPLS_HPP

// Umbrella header.

#include "eprim.hpp"
#include "families.hpp"
#include "gf.hpp"
#include "io.hpp"
#include "linspace.hpp"
#include "perm.hpp"
#include "refine.hpp"
#include "star.hpp"

#endif
