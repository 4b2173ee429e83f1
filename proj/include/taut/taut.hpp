// Convenience umbrella for the whole library.

#pragma once

#include "taut/calculus.hpp"
#include "taut/completeness.hpp"
#include "taut/formula.hpp"
#include "taut/proof_json.hpp"
#include "taut/semantics.hpp"
#include "taut/text.hpp"
