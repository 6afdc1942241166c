#pragma once

#include "kanforge/abelian_group.hpp"
#include "kanforge/chain_complex.hpp"
#include "kanforge/chain_maps.hpp"
#include "kanforge/charclass.hpp"
#include "kanforge/classifying.hpp"
#include "kanforge/config.hpp"
#include "kanforge/cup_product.hpp"
#include "kanforge/discrete_group.hpp"
#include "kanforge/fibrant.hpp"
#include "kanforge/fundamental_group.hpp"
#include "kanforge/homology.hpp"
#include "kanforge/horns.hpp"
#include "kanforge/principal.hpp"
#include "kanforge/product.hpp"
#include "kanforge/quotient.hpp"
#include "kanforge/simplicial_group.hpp"
#include "kanforge/standard.hpp"
#include "kanforge/twisting.hpp"
#include "kanforge/wbar.hpp"
