#pragma once

// Umbrella header.

#include "crooked/error.hpp"
#include "crooked/sl2.hpp"
#include "crooked/core.hpp"
#include "crooked/ads.hpp"
#include "crooked/minkowski.hpp"
#include "crooked/crooked_ads.hpp"
#include "crooked/embedding.hpp"
#include "crooked/crooked_surface.hpp"
#include "crooked/random.hpp"
#include "crooked/strata.hpp"
#include "crooked/verify.hpp"
#include "crooked/mesh.hpp"
#include "crooked/json_io.hpp"
