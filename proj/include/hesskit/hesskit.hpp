#ifndef HESSKIT_HESSKIT_HPP
#define HESSKIT_HESSKIT_HPP

#include "error.hpp"
#include "hessenberg.hpp"
#include "monomial.hpp"
#include "shape.hpp"
#include "filling.hpp"
#include "dimension_pairs.hpp"
#include "tree.hpp"
#include "springer.hpp"
#include "regnilp.hpp"
#include "polynomial.hpp"
#include "groebner.hpp"
#include "format.hpp"

#endif
