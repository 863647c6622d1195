#pragma once

// Everything at once.

#include "lambdacc/term.hpp"
#include "lambdacc/named.hpp"
#include "lambdacc/rewrite.hpp"
#include "lambdacc/constants.hpp"
#include "lambdacc/calculi.hpp"
#include "lambdacc/syntax.hpp"
#include "lambdacc/strategies.hpp"
#include "lambdacc/measures.hpp"
#include "lambdacc/ars.hpp"
#include "lambdacc/steps.hpp"
#include "lambdacc/translations.hpp"
#include "lambdacc/enumerate.hpp"
#include "lambdacc/properties.hpp"
#include "lambdacc/gallery.hpp"
