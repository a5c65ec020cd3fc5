#include "tautilt/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tautilt/errors.hpp"
#include "tautilt/matrix.hpp"

namespace tautilt {

namespace {

struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;
};

using PathKey = std::pair<int, std::vector<int>>;

// kQ / (I + R^{bound+1}) on the paths of length <= bound.
struct TruncatedQuotient {
  std::vector<Path> paths;
  std::map<PathKey, std::size_t> index;
  std::vector<bool> standard;
  std::vector<SparseVector> normal_form;  // over path indices
  std::size_t dimension = 0;
};

TruncatedQuotient truncated_quotient(const Field& field, int vertex_count, const std::vector<int>& arrow_source,
                                     const std::vector<int>& arrow_target,
                                     const std::vector<Algebra::IndexedRelation>& relations, int bound) {
  TruncatedQuotient q;
  std::vector<Path> level;
  for (int v = 0; v < vertex_count; ++v) level.push_back({v, v, {}});
  for (int length = 0; length <= bound; ++length) {
    for (const auto& p : level) q.paths.push_back(p);
    if (length == bound) break;
    std::vector<Path> next;
    for (const auto& p : level) {
      for (std::size_t a = 0; a < arrow_source.size(); ++a) {
        if (arrow_source[a] != p.target) continue;
        Path ext = p;
        ext.arrows.push_back(static_cast<int>(a));
        ext.target = arrow_target[a];
        next.push_back(std::move(ext));
      }
    }
    std::sort(next.begin(), next.end(), [](const Path& x, const Path& y) { return x.arrows < y.arrows; });
    level = std::move(next);
  }
  for (std::size_t i = 0; i < q.paths.size(); ++i) q.index[{q.paths[i].source, q.paths[i].arrows}] = i;

  const std::size_t n = q.paths.size();
  // Columns are laid out largest path first so that echelon pivots are the
  // leading monomials under the length-then-lex order.
  auto column_of = [n](std::size_t path) { return n - 1 - path; };
  std::vector<std::vector<Scalar>> rows;
  for (const auto& rel : relations) {
    for (const auto& w : q.paths) {
      if (w.target != rel.source) continue;
      for (const auto& u : q.paths) {
        if (u.source != rel.target) continue;
        std::vector<Scalar> row(n);
        bool nonzero = false;
        for (const auto& [coeff, term] : rel.terms) {
          std::vector<int> arrows = w.arrows;
          arrows.insert(arrows.end(), term.begin(), term.end());
          arrows.insert(arrows.end(), u.arrows.begin(), u.arrows.end());
          if (static_cast<int>(arrows.size()) > bound) continue;
          auto it = q.index.find({w.source, arrows});
          auto& slot = row[column_of(it->second)];
          slot = field.add(slot, coeff);
          nonzero = nonzero || slot != 0;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }
  }

  q.standard.assign(n, true);
  q.normal_form.assign(n, {});
  if (!rows.empty()) {
    Matrix m(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
    auto e = linalg::rref(field, std::move(m));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const std::size_t leading = n - 1 - e.pivots[r];
      q.standard[leading] = false;
      for (std::size_t c = e.pivots[r] + 1; c < n; ++c) {
        if (e.reduced(r, c) != 0) q.normal_form[leading].push_back({n - 1 - c, field.neg(e.reduced(r, c))});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (q.standard[i]) {
      q.normal_form[i] = {{i, Scalar(1)}};
      ++q.dimension;
    }
  }
  return q;
}

std::uint64_t fnv(std::uint64_t h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  h ^= 0xff;
  h *= 1099511628211ULL;
  return h;
}

}  // namespace

bool AlgebraElement::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Scalar& x) { return x == 0; });
}

int Algebra::vertex_index(const std::string& name) const {
  auto it = std::find(presentation_.vertices.begin(), presentation_.vertices.end(), name);
  if (it == presentation_.vertices.end()) throw Error(ErrorKind::UnknownVertex, "no vertex named '" + name + "'");
  return static_cast<int>(it - presentation_.vertices.begin());
}

int Algebra::arrow_index(const std::string& name) const {
  for (int a = 0; a < arrow_count(); ++a) {
    if (presentation_.arrows[a].name == name) return a;
  }
  throw Error(ErrorKind::InvalidPresentation, "no arrow named '" + name + "'");
}

void Algebra::index_presentation() {
  const auto& spec = presentation_;
  if (spec.vertices.empty()) throw Error(ErrorKind::EmptyQuiver, "the quiver has no vertices");
  if (spec.nilpotency_bound < 1) throw Error(ErrorKind::InvalidPresentation, "nilpotency bound must be positive");
  std::set<std::string> seen(spec.vertices.begin(), spec.vertices.end());
  if (seen.size() != spec.vertices.size()) throw Error(ErrorKind::InvalidPresentation, "duplicate vertex names");
  std::set<std::string> arrow_names;
  arrow_source_.clear();
  arrow_target_.clear();
  for (const auto& a : spec.arrows) {
    if (!arrow_names.insert(a.name).second) {
      throw Error(ErrorKind::InvalidPresentation, "duplicate arrow name '" + a.name + "'");
    }
    arrow_source_.push_back(vertex_index(a.from));
    arrow_target_.push_back(vertex_index(a.to));
  }
  relations_.clear();
  for (std::size_t r = 0; r < spec.relations.size(); ++r) {
    const auto& rel = spec.relations[r];
    if (rel.empty()) throw Error(ErrorKind::InvalidPresentation, "relation " + std::to_string(r) + " has no terms");
    IndexedRelation indexed;
    for (std::size_t t = 0; t < rel.size(); ++t) {
      const auto& term = rel[t];
      if (term.path.size() < 2) {
        throw Error(ErrorKind::NonAdmissible,
                    "relation " + std::to_string(r) + " has a term of length < 2 (ideal not inside R^2)");
      }
      std::vector<int> arrows;
      for (const auto& name : term.path) arrows.push_back(arrow_index(name));
      for (std::size_t k = 1; k < arrows.size(); ++k) {
        if (arrow_target_[arrows[k - 1]] != arrow_source_[arrows[k]]) {
          throw Error(ErrorKind::InvalidPresentation,
                      "relation " + std::to_string(r) + " has a non-composable term path");
        }
      }
      const int s = arrow_source_[arrows.front()];
      const int tg = arrow_target_[arrows.back()];
      if (t == 0) {
        indexed.source = s;
        indexed.target = tg;
      } else if (s != indexed.source || tg != indexed.target) {
        throw Error(ErrorKind::NonAdmissible, "relation " + std::to_string(r) + " has non-parallel terms");
      }
      indexed.terms.push_back({field_.reduce(term.coefficient), std::move(arrows)});
    }
    relations_.push_back(std::move(indexed));
  }
}

void Algebra::finish() {
  const int n = vertex_count();
  paths_.assign(static_cast<std::size_t>(n) * n, {});
  idempotent_.assign(n, 0);
  arrow_basis_.assign(arrow_count(), 0);
  path_position_.assign(basis_.size(), 0);
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const auto& p = basis_[b];
    auto& list = paths_[static_cast<std::size_t>(p.target) * n + p.source];
    path_position_[b] = list.size();
    list.push_back(b);
    if (p.arrows.empty()) idempotent_[p.source] = b;
    if (p.arrows.size() == 1) arrow_basis_[p.arrows.front()] = b;
  }
  std::uint64_t h = 1469598103934665603ULL;
  h = fnv(h, field_.characteristic().get_str());
  for (const auto& v : presentation_.vertices) h = fnv(h, v);
  for (const auto& a : presentation_.arrows) h = fnv(h, a.name + ":" + a.from + ">" + a.to);
  for (const auto& p : basis_) {
    std::string s = std::to_string(p.source) + "/";
    for (int a : p.arrows) s += std::to_string(a) + ",";
    h = fnv(h, s);
  }
  for (const auto& sv : products_) {
    std::string s;
    for (const auto& [i, c] : sv) s += std::to_string(i) + "=" + c.get_str() + ";";
    h = fnv(h, s);
  }
  fingerprint_ = h;
}

AlgebraPtr build_algebra(const QuiverPresentation& spec, const Field& field) {
  std::shared_ptr<Algebra> algebra(new Algebra());
  algebra->field_ = field;
  algebra->presentation_ = spec;
  for (auto& rel : algebra->presentation_.relations)
    for (auto& term : rel) term.coefficient = field.reduce(term.coefficient);
  algebra->index_presentation();

  const int bound = spec.nilpotency_bound;
  auto q = truncated_quotient(field, algebra->vertex_count(), algebra->arrow_source_, algebra->arrow_target_,
                              algebra->relations_, bound);
  auto check = truncated_quotient(field, algebra->vertex_count(), algebra->arrow_source_, algebra->arrow_target_,
                                  algebra->relations_, bound + 1);
  if (q.dimension != check.dimension) {
    bool homogeneous = true;
    for (const auto& rel : algebra->relations_)
      for (const auto& term : rel.terms)
        homogeneous = homogeneous && term.second.size() == rel.terms.front().second.size();
    std::string msg = "dimension changes from " + std::to_string(q.dimension) + " at bound " +
                      std::to_string(bound) + " to " + std::to_string(check.dimension) + " at bound " +
                      std::to_string(bound + 1) + "; the ideal is not admissible or the bound is too small";
    if (!homogeneous) msg += " (relations are not length-homogeneous: the stabilization test is a heuristic)";
    throw Error(ErrorKind::NonAdmissible, msg);
  }

  std::vector<std::size_t> basis_of_path(q.paths.size(), SIZE_MAX);
  for (std::size_t i = 0; i < q.paths.size(); ++i) {
    if (!q.standard[i]) continue;
    basis_of_path[i] = algebra->basis_.size();
    algebra->basis_.push_back({q.paths[i].source, q.paths[i].target, q.paths[i].arrows});
  }
  const std::size_t d = algebra->basis_.size();
  algebra->products_.assign(d * d, {});
  for (std::size_t b = 0; b < d; ++b) {
    for (std::size_t c = 0; c < d; ++c) {
      const auto& pb = algebra->basis_[b];
      const auto& pc = algebra->basis_[c];
      if (pc.target != pb.source) continue;
      std::vector<int> arrows = pc.arrows;
      arrows.insert(arrows.end(), pb.arrows.begin(), pb.arrows.end());
      if (static_cast<int>(arrows.size()) > bound) continue;
      const std::size_t path = q.index.at({pc.source, arrows});
      SparseVector sv;
      for (const auto& [p, coeff] : q.normal_form[path]) sv.push_back({basis_of_path[p], coeff});
      std::sort(sv.begin(), sv.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      algebra->products_[b * d + c] = std::move(sv);
    }
  }
  algebra->finish();
  return algebra;
}

QuiverPresentation opposite_presentation(const QuiverPresentation& spec) {
  QuiverPresentation op = spec;
  for (auto& a : op.arrows) std::swap(a.from, a.to);
  for (auto& rel : op.relations)
    for (auto& term : rel) std::reverse(term.path.begin(), term.path.end());
  return op;
}

AlgebraPtr Algebra::opposite() const {
  if (auto origin = opposite_of_.lock()) return origin;
  std::call_once(opposite_once_, [this] {
    std::shared_ptr<Algebra> op(new Algebra());
    op->field_ = field_;
    op->presentation_ = opposite_presentation(presentation_);
    op->index_presentation();
    op->basis_ = basis_;
    for (auto& p : op->basis_) {
      std::swap(p.source, p.target);
      std::reverse(p.arrows.begin(), p.arrows.end());
    }
    const std::size_t d = basis_.size();
    op->products_.assign(d * d, {});
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) op->products_[b * d + c] = products_[c * d + b];
    op->finish();
    op->opposite_of_ = shared_from_this();
    opposite_ = op;
  });
  return opposite_;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& algebra) { return algebra->opposite(); }

bool same_algebra(const Algebra& a, const Algebra& b) { return &a == &b || a.fingerprint() == b.fingerprint(); }

AlgebraElement Algebra::zero() const { return {std::vector<Scalar>(dimension())}; }

AlgebraElement Algebra::basis_element(std::size_t b) const {
  AlgebraElement e = zero();
  e.coefficients[b] = 1;
  return e;
}

AlgebraElement Algebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  const std::size_t d = dimension();
  AlgebraElement out = zero();
  for (std::size_t b = 0; b < d; ++b) {
    if (x.coefficients[b] == 0) continue;
    for (std::size_t c = 0; c < d; ++c) {
      if (y.coefficients[c] == 0) continue;
      const Scalar w = x.coefficients[b] * y.coefficients[c];
      for (const auto& [i, coeff] : product(b, c)) out.coefficients[i] += w * coeff;
    }
  }
  for (auto& c : out.coefficients) c = field_.reduce(c);
  return out;
}

AlgebraElement Algebra::add(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out = zero();
  for (std::size_t i = 0; i < dimension(); ++i) out.coefficients[i] = field_.add(x.coefficients[i], y.coefficients[i]);
  return out;
}

AlgebraElement Algebra::subtract(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out = zero();
  for (std::size_t i = 0; i < dimension(); ++i) out.coefficients[i] = field_.sub(x.coefficients[i], y.coefficients[i]);
  return out;
}

AlgebraElement Algebra::scale(const Scalar& s, const AlgebraElement& x) const {
  AlgebraElement out = zero();
  for (std::size_t i = 0; i < dimension(); ++i) out.coefficients[i] = field_.mul(s, x.coefficients[i]);
  return out;
}

std::string Algebra::basis_label(std::size_t b) const {
  const auto& p = basis_[b];
  if (p.arrows.empty()) return "e" + vertex_name(p.source);
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += arrow_name(*it);
  }
  return s;
}

}  // namespace tautilt
