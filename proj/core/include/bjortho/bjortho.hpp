#pragma once

#include "bjortho/catalog.hpp"
#include "bjortho/error.hpp"
#include "bjortho/operators.hpp"
#include "bjortho/orthogonality.hpp"
#include "bjortho/parallel.hpp"
#include "bjortho/space.hpp"
#include "bjortho/space_io.hpp"
#include "bjortho/symmetry.hpp"
