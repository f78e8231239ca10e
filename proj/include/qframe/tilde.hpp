// Copyright 2026 The qframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFRAME_TILDE_HPP_
#define QFRAME_TILDE_HPP_

// Real embeddings x -> x~ and T -> T~ with <T x, x> = <T~, x~>.
//
// Coordinates come in blocks, one per row index i = 1..n. Block i covers the
// index pairs (i, j), j >= i, in increasing j:
//
//   RealFull        (x_i x_i, x_i x_{i+1}, ..., x_i x_n)
//   ComplexFull     (|x_i|^2, Re(conj(x_i) x_j), Im(conj(x_i) x_j), ...)
//   RealTraceOne    as RealFull, without the (1,1) slot and with diagonal
//                   slots x_i^2 - x_1^2
//   ComplexTraceOne as ComplexFull, without the (1,1) slot and with diagonal
//                   slots |x_i|^2 - |x_1|^2
//
// On the operator side diagonal entries carry weight 1 and off-diagonal
// entries weight 2 (complex: 2 Re(a_ij), -2 Im(a_ij)). The trace-one pairing
// is exact for trace-zero operators.

#include <qframe/core.hpp>

#include <string>
#include <vector>

namespace qframe {

enum class TildeVariant { RealFull, ComplexFull, RealTraceOne, ComplexTraceOne };

inline const char* to_string(TildeVariant v) {
  switch (v) {
    case TildeVariant::RealFull: return "real";
    case TildeVariant::ComplexFull: return "complex";
    case TildeVariant::RealTraceOne: return "real-trace-one";
    case TildeVariant::ComplexTraceOne: return "complex-trace-one";
  }
  return "?";
}

inline TildeVariant variant_from_string(const std::string& s) {
  if (s == "real") return TildeVariant::RealFull;
  if (s == "complex") return TildeVariant::ComplexFull;
  if (s == "real-trace-one") return TildeVariant::RealTraceOne;
  if (s == "complex-trace-one") return TildeVariant::ComplexTraceOne;
  throw ValidationError("unknown variant '" + s + "'");
}

inline Field field_of(TildeVariant v) {
  return (v == TildeVariant::RealFull || v == TildeVariant::RealTraceOne) ? Field::Real
                                                                          : Field::Complex;
}

inline bool is_trace_one(TildeVariant v) {
  return v == TildeVariant::RealTraceOne || v == TildeVariant::ComplexTraceOne;
}

inline TildeVariant full_variant(Field f) {
  return f == Field::Real ? TildeVariant::RealFull : TildeVariant::ComplexFull;
}

inline Index embed_dim(TildeVariant v, Index n) {
  switch (v) {
    case TildeVariant::RealFull: return n * (n + 1) / 2;
    case TildeVariant::ComplexFull: return n * n;
    case TildeVariant::RealTraceOne: return n * (n + 1) / 2 - 1;
    case TildeVariant::ComplexTraceOne: return n * n - 1;
  }
  return 0;
}

// One coordinate of the embedding: which entry (i, j) it reads and how.
struct TildeSlot {
  enum class Kind { Diagonal, RealPart, ImagPart };
  Index i;
  Index j;
  Kind kind;
};

inline void require_valid(TildeVariant v, Index n) {
  if (n < 1) throw DimensionError("dimension must be at least 1");
  if (is_trace_one(v) && n < 2) throw DimensionError("trace-one embeddings need n >= 2");
}

// Slot layout in block order; its length is embed_dim(v, n).
inline std::vector<TildeSlot> tilde_slots(TildeVariant v, Index n) {
  require_valid(v, n);
  const bool complex = field_of(v) == Field::Complex;
  std::vector<TildeSlot> slots;
  slots.reserve(static_cast<std::size_t>(embed_dim(v, n)));
  for (Index i = 0; i < n; ++i) {
    if (!(is_trace_one(v) && i == 0)) slots.push_back({i, i, TildeSlot::Kind::Diagonal});
    for (Index j = i + 1; j < n; ++j) {
      slots.push_back({i, j, TildeSlot::Kind::RealPart});
      if (complex) slots.push_back({i, j, TildeSlot::Kind::ImagPart});
    }
  }
  return slots;
}

namespace detail {

inline void check_field(TildeVariant v, Field f) {
  if (field_of(v) != f)
    throw FieldError(std::string("variant '") + to_string(v) + "' does not match a " +
                     to_string(f) + " input");
}

// Fills out with x~ using a precomputed slot layout.
inline void embed_into(const std::vector<TildeSlot>& slots, bool trace_one, const Vector& x,
                       double* out) {
  const double base = trace_one ? std::norm(x(0)) : 0.0;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const TildeSlot& slot = slots[s];
    switch (slot.kind) {
      case TildeSlot::Kind::Diagonal: out[s] = std::norm(x(slot.i)) - base; break;
      case TildeSlot::Kind::RealPart: out[s] = (std::conj(x(slot.i)) * x(slot.j)).real(); break;
      case TildeSlot::Kind::ImagPart: out[s] = (std::conj(x(slot.i)) * x(slot.j)).imag(); break;
    }
  }
}

}  // namespace detail

struct TildeVector {
  TildeVariant variant;
  Index n;
  RealVector entries;
};

inline TildeVector embed_vector(const Vector& x, Field field, TildeVariant v) {
  detail::check_field(v, field);
  const auto slots = tilde_slots(v, x.size());
  TildeVector out{v, x.size(), RealVector(static_cast<Index>(slots.size()))};
  detail::embed_into(slots, is_trace_one(v), x, out.entries.data());
  return out;
}

inline TildeVector embed_vector(const RealVector& x, TildeVariant v) {
  return embed_vector(Vector(x.cast<Scalar>()), Field::Real, v);
}

// T~. For trace-one variants the (1,1) entry is dropped; the pairing
// identity then holds for trace-zero T.
inline TildeVector embed_operator(const SelfAdjointOperator& t, TildeVariant v) {
  detail::check_field(v, t.field());
  const auto slots = tilde_slots(v, t.dim());
  TildeVector out{v, t.dim(), RealVector(static_cast<Index>(slots.size()))};
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const TildeSlot& slot = slots[s];
    const Scalar a = t(slot.i, slot.j);
    double value = 0.0;
    switch (slot.kind) {
      case TildeSlot::Kind::Diagonal: value = a.real(); break;
      case TildeSlot::Kind::RealPart: value = 2.0 * a.real(); break;
      case TildeSlot::Kind::ImagPart: value = -2.0 * a.imag(); break;
    }
    out.entries(static_cast<Index>(s)) = value;
  }
  return out;
}

// Hermitian B with <B x, x> = <a, x~> for all x. Off-diagonal entries are
// b_ij = (u_ij - i v_ij) / 2; trace-one variants set b_11 = -sum_{i>1} a_ii.
inline SelfAdjointOperator operator_from_dual(const RealVector& a, TildeVariant v, Index n) {
  const auto slots = tilde_slots(v, n);
  if (a.size() != static_cast<Index>(slots.size()))
    throw DimensionError("dual vector length " + std::to_string(a.size()) + " != embed_dim " +
                         std::to_string(slots.size()));
  Matrix b = Matrix::Zero(n, n);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const TildeSlot& slot = slots[s];
    const double value = a(static_cast<Index>(s));
    switch (slot.kind) {
      case TildeSlot::Kind::Diagonal: b(slot.i, slot.i) = value; break;
      case TildeSlot::Kind::RealPart: b(slot.i, slot.j) += Scalar(0.5 * value, 0.0); break;
      case TildeSlot::Kind::ImagPart: b(slot.i, slot.j) += Scalar(0.0, -0.5 * value); break;
    }
  }
  if (is_trace_one(v)) {
    double sum = 0.0;
    for (Index i = 1; i < n; ++i) sum += b(i, i).real();
    b(0, 0) = -sum;
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) b(j, i) = std::conj(b(i, j));
  return SelfAdjointOperator(field_of(v), b);
}

inline SelfAdjointOperator operator_from_dual(const TildeVector& a) {
  return operator_from_dual(a.entries, a.variant, a.n);
}

// m x D matrix whose row k is x~_k.
struct TildeMatrix {
  TildeVariant variant;
  Index n;
  RealMatrix rows;
};

inline TildeMatrix tilde_matrix(const Frame& frame, TildeVariant v) {
  detail::check_field(v, frame.field());
  const auto slots = tilde_slots(v, frame.dim());
  // Row-major scratch so each embedded vector is contiguous.
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows(
      frame.size(), static_cast<Index>(slots.size()));
  for (Index k = 0; k < frame.size(); ++k)
    detail::embed_into(slots, is_trace_one(v), frame.vector(k), rows.row(k).data());
  return {v, frame.dim(), RealMatrix(rows)};
}

// Weight of each coordinate when the unknowns are the operator entries
// themselves: 1 for a_ii, 2 for Re a_ij, -2 for Im a_ij.
inline RealVector entry_weights(TildeVariant v, Index n) {
  const auto slots = tilde_slots(v, n);
  RealVector w(static_cast<Index>(slots.size()));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    switch (slots[s].kind) {
      case TildeSlot::Kind::Diagonal: w(static_cast<Index>(s)) = 1.0; break;
      case TildeSlot::Kind::RealPart: w(static_cast<Index>(s)) = 2.0; break;
      case TildeSlot::Kind::ImagPart: w(static_cast<Index>(s)) = -2.0; break;
    }
  }
  return w;
}

}  // namespace qframe

#endif  // QFRAME_TILDE_HPP_
