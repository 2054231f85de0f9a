#pragma once

#include "mtc/abelian_group.hpp"
#include "mtc/analyze.hpp"
#include "mtc/cyclo.hpp"
#include "mtc/fusion.hpp"
#include "mtc/io.hpp"
#include "mtc/moddata.hpp"
#include "mtc/number_theory.hpp"
#include "mtc/report.hpp"
#include "mtc/zoo.hpp"
