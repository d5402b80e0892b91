#ifndef GRIDWORD_GRIDWORD_HPP_
#define GRIDWORD_GRIDWORD_HPP_

#include "gridword/construct.hpp"
#include "gridword/domination.hpp"
#include "gridword/errors.hpp"
#include "gridword/formula.hpp"
#include "gridword/io.hpp"
#include "gridword/oracle.hpp"
#include "gridword/render.hpp"
#include "gridword/verify.hpp"
#include "gridword/word.hpp"

#endif  // GRIDWORD_GRIDWORD_HPP_
