#ifndef CANTORVAL_CANTORVAL_HPP
#define CANTORVAL_CANTORVAL_HPP

#include "cantorval/achievement.hpp"
#include "cantorval/budget.hpp"
#include "cantorval/cantor.hpp"
#include "cantorval/classifier.hpp"
#include "cantorval/difference.hpp"
#include "cantorval/errors.hpp"
#include "cantorval/gap_forest.hpp"
#include "cantorval/interval.hpp"
#include "cantorval/json_io.hpp"
#include "cantorval/lambda.hpp"
#include "cantorval/rational.hpp"
#include "cantorval/render.hpp"
#include "cantorval/sequence.hpp"
#include "cantorval/series_sum.hpp"

#endif  // CANTORVAL_CANTORVAL_HPP
