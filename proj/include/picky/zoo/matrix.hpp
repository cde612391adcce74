#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "picky/classes.hpp"
#include "picky/group.hpp"
#include "picky/zoo/field.hpp"

namespace picky::zoo {

using Elt = FiniteField::Elt;
using Vector = std::vector<Elt>;

/// Square matrix over a FiniteField, row-major. Acts on row vectors from
/// the right, matching the permutation convention.
struct Matrix {
  unsigned n = 0;
  std::vector<Elt> e;

  Elt at(unsigned i, unsigned j) const { return e[i * n + j]; }
  Elt& at(unsigned i, unsigned j) { return e[i * n + j]; }
  static Matrix identity(unsigned n);
  static Matrix scalar(unsigned n, Elt c);
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix mul(const FiniteField& f, const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
/// Entrywise x -> x^r.
Matrix frobenius(const FiniteField& f, const Matrix& a, std::uint64_t r);
Elt det(const FiniteField& f, Matrix a);
unsigned rank(const FiniteField& f, std::vector<Vector> rows);
Vector apply(const FiniteField& f, const Vector& v, const Matrix& m);
/// Solve for the matrix with rows[i] * M = images[i]; rows must be a basis.
Matrix solve_basis(const FiniteField& f, const std::vector<Vector>& rows,
                   const std::vector<Vector>& images);
/// Jordan block sizes (descending) of a unipotent matrix.
std::vector<unsigned> jordan_type(const FiniteField& f, const Matrix& u);

enum class FormKind { none, alternating, hermitian, symmetric };
std::string form_name(FormKind k);
FormKind parse_form(const std::string& s);

/// Classical families. SU uses the field of order q^2; all others F_q.
enum class Family { GL, SL, SU, Sp, SO, SOplus, SOminus, Sz };
std::string family_name(Family f);
Family parse_family(const std::string& s);
/// Order of the matrix group from its closed formula.
std::uint64_t classical_order(Family f, unsigned n, std::uint64_t q);
/// Field order of the matrix entries.
std::uint64_t family_field_order(Family f, std::uint64_t q);

/// Generator matrices with a preserved form, validated on construction.
struct MatrixGroup {
  std::string name;
  Family family = Family::SL;
  unsigned n = 0;
  std::uint64_t q = 0;
  FiniteField field{2};
  std::vector<Matrix> generators;
  FormKind form_kind = FormKind::none;
  Matrix form;
  std::uint64_t expected_order = 0;
  std::string provenance;

  /// Throws InternalInconsistency on determinant, form, entry range or
  /// order-formula failure.
  void validate() const;
  bool preserves_form(const Matrix& m) const;
  /// Scalars lambda I lying in the group's defining conditions.
  std::vector<Elt> central_scalars() const;

  nlohmann::json to_json() const;
  static MatrixGroup from_json(const nlohmann::json& j);
};

/// Permutation action of a matrix group on the orbit of a seed vector
/// (vectors) or of its span (projective points). Points are numbered in
/// breadth-first orbit order, applying generators in order.
class MatrixAction {
public:
  static constexpr std::uint64_t default_orbit_bound = 1'000'000;

  MatrixAction(const MatrixGroup& mg, bool projective, std::optional<Vector> seed = {},
               std::uint64_t orbit_bound = default_orbit_bound);

  const MatrixGroup& matrix_group() const { return mg_; }
  bool projective() const { return projective_; }
  const Group& group() const { return group_; }
  std::size_t degree() const { return points_.size(); }
  const std::vector<Vector>& points() const { return points_; }
  /// Point index of v (normalised first in projective actions), or npos.
  std::size_t point_of(const Vector& v) const;
  Perm perm_of(const Matrix& m) const;
  /// The matrix inducing x; vector actions only (the orbit spans).
  Matrix matrix_of(const Perm& x) const;

  static constexpr std::size_t npos = ~std::size_t{0};

private:
  std::uint64_t key(const Vector& v) const;
  Vector normalise(Vector v) const;

  MatrixGroup mg_;
  bool projective_;
  std::vector<Vector> points_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  Group group_;
  std::vector<std::size_t> basis_points_;
};

/// The natural faithful action on vectors: checks |G| = expected_order.
MatrixAction vector_action(const MatrixGroup& mg);
/// The action on projective points: checks that the kernel is exactly the
/// group of central scalars.
MatrixAction projective_action(const MatrixGroup& mg);

/// x in the projective image of `vec`'s group, induced by a vector-action
/// permutation.
Perm project_to(const MatrixAction& vec, const MatrixAction& proj, const Perm& x);

/// Classes (indices into `cd_vec`) of p-elements of the vector action whose
/// matrix is unipotent with the given Jordan type.
std::vector<std::size_t> unipotent_classes_of_type(const MatrixAction& vec,
                                                   const ClassData& cd_vec,
                                                   const std::vector<unsigned>& type);

} // namespace picky::zoo
