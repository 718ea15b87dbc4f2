#include "liebw/liealg.hpp"

#include <algorithm>
#include <cctype>

#include "liebw/errors.hpp"

namespace liebw {

BasisChange::BasisChange(PolyMatrix m, std::vector<std::string> labels)
    : m_(std::move(m)), labels_(std::move(labels)) {
  inv_ = invert(m_);
  if (!labels_.empty() && labels_.size() != m_.size()) {
    throw DimensionMismatch("basis change labels: expected " + std::to_string(m_.size()));
  }
}

BasisChange BasisChange::inverse(std::vector<std::string> old_labels) const {
  return BasisChange(inv_, m_, std::move(old_labels));
}

BasisChange BasisChange::substitute(const Substitution& s) const {
  return BasisChange(liebw::substitute(m_, s), labels_);
}

PolyVec BasisChange::to_old(const PolyVec& v_new) const {
  if (v_new.size() != dim()) throw DimensionMismatch("vector length");
  PolyVec out(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (v_new[a].is_zero()) continue;
    for (std::size_t i = 0; i < dim(); ++i) out[i].add_product(m_[a][i], v_new[a]);
  }
  return out;
}

PolyVec BasisChange::to_new(const PolyVec& v_old) const {
  if (v_old.size() != dim()) throw DimensionMismatch("vector length");
  PolyVec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v_old[i].is_zero()) continue;
    for (std::size_t a = 0; a < dim(); ++a) out[a].add_product(inv_[i][a], v_old[i]);
  }
  return out;
}

SymmetricTensor::SymmetricTensor(Tensor2 k) : k_(std::move(k)) {
  for (std::size_t a = 0; a < k_.dim(); ++a) {
    for (std::size_t b = a + 1; b < k_.dim(); ++b) {
      if (!(k_(a, b) == k_(b, a))) throw ShapeError("symmetric tensor is not symmetric");
    }
  }
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const std::vector<BracketEntry>& brackets)
    : labels_(std::move(labels)), c_(labels_.size()) {
  const std::size_t n = labels_.size();
  if (n == 0) throw DimensionMismatch("Lie algebra needs a positive dimension");
  for (const auto& e : brackets) {
    if (e.i >= n || e.j >= n || e.k >= n) {
      throw IndexOutOfRange("bracket entry (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                            "," + std::to_string(e.k) + ") in dimension " + std::to_string(n));
    }
    if (e.i == e.j) {
      if (e.coef.is_zero()) continue;
      throw SymmetricEntry("[" + labels_[e.i] + "," + labels_[e.i] + "] given a nonzero coefficient");
    }
    c_(e.i, e.j, e.k) += e.coef;
    c_(e.j, e.i, e.k) -= e.coef;
  }
}

LieAlgebra::LieAlgebra(std::vector<std::string> labels, Tensor3 c)
    : labels_(std::move(labels)), c_(std::move(c)) {
  if (labels_.size() != c_.dim()) throw DimensionMismatch("labels vs structure constants");
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i; j < dim(); ++j) {
      for (std::size_t k = 0; k < dim(); ++k) {
        if (!(c_(i, j, k) == -c_(j, i, k))) {
          throw ShapeError("structure constants not antisymmetric at (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
}

std::optional<std::size_t> LieAlgebra::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::set<std::string> LieAlgebra::parameters() const {
  std::set<std::string> out;
  for (const auto& p : c_.data()) out.merge(p.parameters());
  return out;
}

Tensor4 LieAlgebra::jacobi_residual() const {
  const std::size_t n = dim();
  // Sparse rows: for each (i,j) the nonzero (k, C_ij^k).
  std::vector<std::vector<std::pair<std::size_t, const PolyExpr*>>> nz(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!c_(i, j, k).is_zero()) nz[i * n + j].emplace_back(k, &c_(i, j, k));
      }
    }
  }
  Tensor4 r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        const std::array<std::array<std::size_t, 3>, 3> cyc{{{i, j, l}, {j, l, i}, {l, i, j}}};
        for (const auto& [a, b, c] : cyc) {
          for (const auto& [k, cab] : nz[a * n + b]) {
            for (const auto& [m, ckc] : nz[k * n + c]) r(i, j, l, m).add_product(*cab, *ckc);
          }
        }
      }
    }
  }
  return r;
}

PolyVec LieAlgebra::bracket(const PolyVec& v, const PolyVec& w) const {
  const std::size_t n = dim();
  if (v.size() != n || w.size() != n) throw DimensionMismatch("bracket: vector length");
  PolyVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (w[j].is_zero()) continue;
      const PolyExpr vw = v[i] * w[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!c_(i, j, k).is_zero()) out[k].add_product(vw, c_(i, j, k));
      }
    }
  }
  return out;
}

PolyMatrix LieAlgebra::adjoint(std::size_t i) const {
  if (i >= dim()) throw IndexOutOfRange("adjoint index " + std::to_string(i));
  PolyMatrix m(dim(), PolyVec(dim()));
  for (std::size_t j = 0; j < dim(); ++j) {
    for (std::size_t k = 0; k < dim(); ++k) m[k][j] = c_(i, j, k);
  }
  return m;
}

LieAlgebra LieAlgebra::change_basis(const BasisChange& m) const {
  const std::size_t n = dim();
  if (m.dim() != n) throw DimensionMismatch("basis change dimension");
  Tensor3 out(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const PolyVec w = m.to_new(bracket(m.matrix()[a], m.matrix()[b]));
      for (std::size_t c = 0; c < n; ++c) {
        out(a, b, c) = w[c];
        out(b, a, c) = -w[c];
      }
    }
  }
  auto labels = m.labels().empty() ? labels_ : m.labels();
  return LieAlgebra(std::move(labels), std::move(out));
}

LieAlgebra LieAlgebra::substitute(const Substitution& s) const {
  return LieAlgebra(labels_, c_.substitute(s));
}

LieAlgebra LieAlgebra::relabeled(std::vector<std::string> labels) const {
  return LieAlgebra(std::move(labels), c_);
}

Tensor3 LieAlgebra::casimir_residual(const SymmetricTensor& k) const {
  const std::size_t n = dim();
  if (k.dim() != n) throw DimensionMismatch("Casimir tensor dimension");
  const Tensor2& kk = k.components();
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        PolyExpr& out = t(i, a, b);
        for (std::size_t c = 0; c < n; ++c) {
          out.add_product(c_(i, c, a), kk(c, b));
          out.add_product(c_(i, c, b), kk(a, c));
        }
      }
    }
  }
  return t;
}

std::vector<BracketEntry> LieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      for (std::size_t k = 0; k < dim(); ++k) {
        if (!c_(i, j, k).is_zero()) out.push_back({i, j, k, c_(i, j, k)});
      }
    }
  }
  return out;
}

}  // namespace liebw

namespace liebw {

std::string format_vector(const PolyVec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    bool negative = v[k].is_unit() && v[k].terms().begin()->second < 0;
    const PolyExpr mag = negative ? -v[k] : v[k];
    std::string term;
    const std::string s = mag.str();
    if (s == "1") {
      term = labels.at(k);
    } else if (mag.term_count() > 1) {
      term = "(" + s + ")*" + labels.at(k);
    } else {
      term = s + "*" + labels.at(k);
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

PolyVec parse_vector(std::string_view text, const std::vector<std::string>& labels) {
  PolyVec out(labels.size());
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("vector '" + std::string(text) + "' at offset " + std::to_string(pos) + ": " + what);
  };
  auto label_at = [&]() -> std::optional<std::size_t> {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const auto& l = labels[k];
      if (text.substr(pos, l.size()) != l) continue;
      const std::size_t end = pos + l.size();
      if (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != '+' &&
          text[end] != '-') {
        continue;
      }
      if (!best || l.size() > labels[*best].size()) best = k;
    }
    return best;
  };

  skip();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first) fail("empty vector");
      break;
    }
    PolyExpr coef(1);
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') coef = PolyExpr(-1);
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    while (true) {
      if (auto k = label_at()) {
        out[*k] += coef;
        pos += labels[*k].size();
        break;
      }
      std::size_t end = pos;
      if (pos < text.size() && text[pos] == '(') {
        int depth = 0;
        for (; end < text.size(); ++end) {
          if (text[end] == '(') ++depth;
          if (text[end] == ')' && --depth == 0) break;
        }
        if (end == text.size()) fail("unbalanced parenthesis");
        ++end;
      } else {
        while (end < text.size() && text[end] != '*') ++end;
      }
      if (end >= text.size() || text[end] != '*') fail("expected a label");
      coef *= PolyExpr::parse(text.substr(pos, end - pos));
      pos = end + 1;
      skip();
    }
  }
  return out;
}

std::string bracket_table_text(const LieAlgebra& l) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::size_t width = 0;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      PolyVec v(l.dim());
      for (std::size_t k = 0; k < l.dim(); ++k) v[k] = l.c(i, j, k);
      if (is_zero_vector(v)) continue;
      std::string lhs = "[" + l.label(i) + ", " + l.label(j) + "]";
      width = std::max(width, lhs.size());
      rows.emplace_back(std::move(lhs), format_vector(v, l.labels()));
    }
  }
  std::string out;
  for (const auto& [lhs, rhs] : rows) {
    out += lhs + std::string(width - lhs.size(), ' ') + " = " + rhs + "\n";
  }
  return out;
}

}  // namespace liebw
