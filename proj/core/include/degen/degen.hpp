#pragma once

#include "degen/appell.hpp"
#include "degen/errors.hpp"
#include "degen/eulerian.hpp"
#include "degen/factorial.hpp"
#include "degen/identities.hpp"
#include "degen/lambda_poly.hpp"
#include "degen/poly.hpp"
#include "degen/rational.hpp"
#include "degen/series.hpp"
#include "degen/stirling.hpp"
#include "degen/wire.hpp"
