#pragma once

#include <aplcm/budget.hpp>
#include <aplcm/error.hpp>
#include <aplcm/gfun.hpp>
#include <aplcm/identities.hpp>
#include <aplcm/natural.hpp>
#include <aplcm/numtheory.hpp>
#include <aplcm/period.hpp>
#include <aplcm/progression.hpp>
#include <aplcm/table_io.hpp>
#include <aplcm/verify.hpp>
