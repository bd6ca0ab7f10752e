#pragma once

#include "prodstruct/exact/checks.hpp"
#include "prodstruct/exact/common.hpp"
#include "prodstruct/exact/orthogonal.hpp"
#include "prodstruct/exact/tree_param.hpp"
#include "prodstruct/exact/widths.hpp"
