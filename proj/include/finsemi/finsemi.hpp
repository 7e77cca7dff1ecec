#pragma once

#include "finsemi/catalog.hpp"
#include "finsemi/classify.hpp"
#include "finsemi/constructions.hpp"
#include "finsemi/elem_set.hpp"
#include "finsemi/errors.hpp"
#include "finsemi/hom.hpp"
#include "finsemi/ideal.hpp"
#include "finsemi/instance.hpp"
#include "finsemi/localize.hpp"
#include "finsemi/search.hpp"
#include "finsemi/semimodule.hpp"
#include "finsemi/semiring.hpp"
#include "finsemi/theorems.hpp"
