#pragma once

#include "closed_forms.hpp"
#include "errors.hpp"
#include "evaluate.hpp"
#include "fox_wright.hpp"
#include "gamma.hpp"
#include "identities.hpp"
#include "inequalities.hpp"
#include "quadrature.hpp"
#include "report_json.hpp"
#include "series.hpp"
#include "types.hpp"
