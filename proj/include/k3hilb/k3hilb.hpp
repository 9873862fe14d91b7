#pragma once

#include "integer.hpp"
#include "error.hpp"
#include "form.hpp"
#include "pell.hpp"
#include "quadform.hpp"
#include "lattice.hpp"
#include "cone.hpp"
#include "cohomology.hpp"
#include "classify.hpp"
#include "existence.hpp"
