#pragma once

#include "kanforge/smooth/affine.hpp"
#include "kanforge/smooth/bump.hpp"
#include "kanforge/smooth/extension.hpp"
#include "kanforge/smooth/maps.hpp"
#include "kanforge/smooth/checks.hpp"
