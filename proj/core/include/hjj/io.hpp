#pragma once

#include <string>

#include "hjj/deformation.hpp"
#include "hjj/representation.hpp"

namespace hjj {

// JSON loaders for the on-disk formats. Scalars are exact rational strings
// ("5", "-3/2") everywhere; anything malformed raises ParseError naming the
// file and field. The *_text variants parse in-memory strings, so round
// trips are testable without touching disk; `origin` only labels errors.
//
// Algebra files: {"basis":["e1","e2"],
//                 "alpha":[["1","0"],["1","1"]],
//                 "products":[{"left":"e1","right":"e1","value":{"e2":"1"}}]}
// with alpha in column convention. Products may list either orientation or
// both; the loader symmetrizes and rejects conflicting duplicates
// (ConflictingProduct).
HomAlgebra parse_algebra(const std::string& path);
HomAlgebra parse_algebra_text(const std::string& text, const std::string& origin = "<memory>");

// Canonical serialization: products listed once per unordered pair in basis
// order, all scalars as strings, two-space indentation. parse ∘ serialize is
// the identity, and serialize ∘ parse is the identity on canonical files.
std::string serialize_algebra(const HomAlgebra& a);

// Representation files over a loaded algebra:
//   {"dim":2,"phi":[[..]],"rho":{"e1":[[..]],"e2":[[..]]}}
// with one rho block per algebra basis label.
Representation parse_representation(const std::string& path, const HomAlgebra& a);
Representation parse_representation_text(const std::string& text, const HomAlgebra& a,
                                         const std::string& origin = "<memory>");

// Linear-operator files: {"matrix":[["0","0"],["1","0"]]}, column convention
// (the matrix sends module coordinates to algebra coordinates).
Matrix parse_operator_matrix(const std::string& path);
Matrix parse_operator_matrix_text(const std::string& text,
                                  const std::string& origin = "<memory>");

// Scalar bilinear forms as sparse pair maps: {"e1,e1":"1"}. One orientation
// suffices; mirrored entries must agree (ConflictingProduct).
BilinearForm parse_form(const std::string& path, const HomAlgebra& a);
BilinearForm parse_form_text(const std::string& text, const HomAlgebra& a,
                             const std::string& origin = "<memory>");

// Product series files: {"order":1,"coeffs":[{...},{...}]} with order+1
// sparse bilinear maps {"e1,e1":{"e2":"1"}}, the first of which must spell
// out the algebra's own product (InvalidSeries otherwise, as for any series).
FormalProductSeries parse_product_series(const std::string& path, const HomAlgebra& a);
FormalProductSeries parse_product_series_text(const std::string& text, const HomAlgebra& a,
                                              const std::string& origin = "<memory>");

}  // namespace hjj
