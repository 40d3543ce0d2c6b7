#ifndef GDSPREAD_GDSPREAD_HPP
#define GDSPREAD_GDSPREAD_HPP

#include "gdspread/bounds.hpp"
#include "gdspread/cliques.hpp"
#include "gdspread/corpus.hpp"
#include "gdspread/eigensolve.hpp"
#include "gdspread/errors.hpp"
#include "gdspread/families.hpp"
#include "gdspread/graph.hpp"
#include "gdspread/matrix.hpp"

#endif // GDSPREAD_GDSPREAD_HPP
