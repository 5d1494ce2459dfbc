#pragma once

#include "jacobipoly/classify.hpp"
#include "jacobipoly/errors.hpp"
#include "jacobipoly/jacobi.hpp"
#include "jacobipoly/numtheory.hpp"
#include "jacobipoly/oracle.hpp"
#include "jacobipoly/parse.hpp"
#include "jacobipoly/poly.hpp"
#include "jacobipoly/rings.hpp"
