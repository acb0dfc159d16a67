#pragma once

#include "celestial/asymptotics.hpp"
#include "celestial/decomposition.hpp"
#include "celestial/errors.hpp"
#include "celestial/linalg.hpp"
#include "celestial/minkowski.hpp"
#include "celestial/riemann_sphere.hpp"
#include "celestial/spin_covers.hpp"
#include "celestial/starfield.hpp"
