#pragma once

#include "prodstruct/constructions.hpp"
#include "prodstruct/containment.hpp"
#include "prodstruct/decomposition.hpp"
#include "prodstruct/decomposition_ops.hpp"
#include "prodstruct/directed_gluing.hpp"
#include "prodstruct/embedding.hpp"
#include "prodstruct/error.hpp"
#include "prodstruct/exact.hpp"
#include "prodstruct/families.hpp"
#include "prodstruct/graph.hpp"
#include "prodstruct/io.hpp"
#include "prodstruct/layering.hpp"
#include "prodstruct/planar.hpp"
#include "prodstruct/product_structure.hpp"
#include "prodstruct/products.hpp"
#include "prodstruct/rng.hpp"
