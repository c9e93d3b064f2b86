#pragma once

#include "jinsig/affine.hpp"
#include "jinsig/congruence.hpp"
#include "jinsig/conic.hpp"
#include "jinsig/counterexamples.hpp"
#include "jinsig/error.hpp"
#include "jinsig/euclidean.hpp"
#include "jinsig/geometry.hpp"
#include "jinsig/host.hpp"
#include "jinsig/mesh.hpp"
#include "jinsig/motion.hpp"
#include "jinsig/signature.hpp"
