#pragma once

#include "dsl.hpp"
#include "errors.hpp"
#include "indicators.hpp"
#include "integer.hpp"
#include "oracle.hpp"
#include "partition_functions.hpp"
#include "pochhammer.hpp"
#include "recurrences.hpp"
#include "report.hpp"
#include "series.hpp"
#include "theta.hpp"
