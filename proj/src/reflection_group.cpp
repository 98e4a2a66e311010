#include "pinosp/reflection_group.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace pinosp {

namespace {

constexpr int kTableLimit = 512;

std::string matrix_key(const Matrix& m) {
  std::string key;
  for (const auto& row : m)
    for (const auto& e : row) {
      key += e.to_string();
      key += ';';
    }
  return key;
}

int matrix_rank(Matrix m) {
  int rows = static_cast<int>(m.size()), cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    BaseNumber inv = m[rank][c].inverse();
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      BaseNumber f = m[r][c] * inv;
      for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Scales a rational vector to a primitive integer vector with positive leading
// entry; non-rational vectors get leading entry 1.
std::vector<BaseNumber> normalize_root(std::vector<BaseNumber> v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead].is_zero()) ++lead;
  bool rational = std::all_of(v.begin(), v.end(), [](const BaseNumber& b) { return b.is_rational(); });
  if (!rational) {
    BaseNumber inv = v[lead].inverse();
    for (auto& e : v) e *= inv;
    return v;
  }
  mpz_class den = 1, num = 0;
  for (const auto& e : v) {
    mpz_class d = e.re().get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (const auto& e : v) {
    Rational scaled = e.re() * Rational(den);
    ints.push_back(scaled.get_num());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (sgn(ints[lead]) < 0) num = -num;
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = BaseNumber(Rational(ints[p] / num));
  return v;
}

bool root_less(const Covector& a, const Covector& b) {
  auto support = [](const Covector& u) {
    std::vector<int> s;
    for (int p = 0; p < u.dim(); ++p)
      if (!u.coords[p].is_zero()) s.push_back(p);
    return s;
  };
  auto sa = support(a), sb = support(b);
  if (sa != sb) return sa < sb;
  for (int p = 0; p < a.dim(); ++p) {
    const auto& x = a.coords[p].constant_value();
    const auto& y = b.coords[p].constant_value();
    if (x == y) continue;
    // values descending: x1 + x2 before x1 - x2
    if (x.re() != y.re()) return x.re() > y.re();
    if (x.im() != y.im()) return x.im() > y.im();
    if (x.rt() != y.rt()) return x.rt() > y.rt();
    return x.irt() > y.irt();
  }
  return false;
}

}  // namespace

ReflectionGroup::ReflectionGroup(QuadraticSpace space, const std::vector<Matrix>& generators,
                                 std::size_t max_order, std::string name)
    : space_(std::move(space)), name_(std::move(name)) {
  int d = space_.dim();
  const Matrix& gram = space_.gram();
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != d) throw std::invalid_argument("generator matrix has wrong size");
    for (const auto& row : g)
      if (static_cast<int>(row.size()) != d) throw std::invalid_argument("generator matrix has wrong size");
    if (!(matmul(matmul(transpose(g), gram), g) == gram))
      throw std::invalid_argument("generator does not preserve the bilinear form");
  }

  lookup_or_add(identity_matrix(d));
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Matrix m = matmul(g, cov_[cur]);
      std::size_t before = cov_.size();
      lookup_or_add(m);
      if (cov_.size() > before) {
        if (cov_.size() > max_order)
          throw std::invalid_argument("group order exceeds the cap of " + std::to_string(max_order));
        queue.push_back(static_cast<int>(cov_.size()) - 1);
      }
    }
  }

  int n = order();
  if (n <= kTableLimit) {
    table_.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int c = index_of(matmul(cov_[a], cov_[b]));
        if (c < 0) throw std::logic_error("group closure is incomplete");
        table_[a][b] = c;
      }
  }
  inverse_.resize(n);
  for (int a = 0; a < n; ++a) inverse_[a] = index_of(invert(cov_[a]));

  // Reflections: order two with a one-dimensional -1 eigenspace.
  Matrix id = identity_matrix(d);
  for (int a = 1; a < n; ++a) {
    if (inverse_[a] != a) continue;
    Matrix diff = id;
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) diff[p][q] -= cov_[a][p][q];
    if (matrix_rank(diff) != 1) continue;
    std::vector<BaseNumber> col;
    for (int q = 0; q < d && col.empty(); ++q) {
      bool nonzero = false;
      for (int p = 0; p < d; ++p) nonzero = nonzero || !diff[p][q].is_zero();
      if (!nonzero) continue;
      for (int p = 0; p < d; ++p) col.push_back(diff[p][q]);
    }
    col = normalize_root(col);
    Reflection r;
    r.element = a;
    r.root = Covector{Space::dual, {}};
    for (const auto& c : col) r.root.coords.emplace_back(c);
    r.root_norm = space_.bilinear(r.root, r.root).constant_value();
    r.coroot = Scalar(BaseNumber(2) / r.root_norm) * space_.beta(r.root);
    reflections_.push_back(std::move(r));
  }
  std::sort(reflections_.begin(), reflections_.end(),
            [](const Reflection& a, const Reflection& b) { return root_less(a.root, b.root); });
  reflection_index_.assign(n, -1);
  for (std::size_t k = 0; k < reflections_.size(); ++k) reflection_index_[reflections_[k].element] = static_cast<int>(k);

  for (auto& r : reflections_) r.cls = -1;
  for (auto& r : reflections_) {
    if (r.cls >= 0) continue;
    if (class_count_ >= kMaxKappa)
      throw std::invalid_argument("more than " + std::to_string(kMaxKappa) + " reflection classes");
    int cls = class_count_++;
    for (int g = 0; g < n; ++g) {
      int conj = multiply(multiply(g, r.element), inverse_[g]);
      reflections_[reflection_index_[conj]].cls = cls;
    }
  }
}

int ReflectionGroup::lookup_or_add(const Matrix& m) {
  auto key = matrix_key(m);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  int idx = static_cast<int>(cov_.size());
  index_.emplace(std::move(key), idx);
  cov_.push_back(m);
  vec_.push_back(transpose(invert(m)));
  return idx;
}

int ReflectionGroup::index_of(const Matrix& m) const {
  auto it = index_.find(matrix_key(m));
  return it == index_.end() ? -1 : it->second;
}

int ReflectionGroup::multiply(int g, int h) const {
  if (!table_.empty()) return table_[g][h];
  int c = index_of(matmul(cov_[g], cov_[h]));
  if (c < 0) throw std::logic_error("product left the group");
  return c;
}

CoordVector ReflectionGroup::act(int g, const CoordVector& u) const {
  const Matrix& m = u.space == Space::dual ? cov_.at(g) : vec_.at(g);
  CoordVector out{u.space, std::vector<Scalar>(u.dim())};
  for (int p = 0; p < u.dim(); ++p)
    for (int q = 0; q < u.dim(); ++q)
      if (!m[p][q].is_zero()) out.coords[p] += u.coords[q].scaled(m[p][q]);
  return out;
}

std::string ReflectionGroup::label(int g) const {
  if (g == 0) return "1";
  if (reflection_index_[g] >= 0) return "s" + std::to_string(reflection_index_[g] + 1);
  return "g" + std::to_string(g);
}

ReflectionGroup build_group(RootType type, int rank, int ambient_dim) {
  return build_group(type, rank, ambient_dim, identity_matrix(std::max(ambient_dim, 1)));
}

ReflectionGroup build_group(RootType type, int rank, int ambient_dim, const Matrix& gram) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (type == RootType::D && rank < 2) throw std::invalid_argument("type D needs rank at least 2");
  int natural = type == RootType::A ? rank + 1 : rank;
  if (ambient_dim < natural)
    throw std::invalid_argument("ambient dimension " + std::to_string(ambient_dim) + " is smaller than " +
                                std::to_string(natural));
  int d = ambient_dim;
  auto swap = [d](int i, int j) {
    Matrix m = identity_matrix(d);
    m[i][i] = 0;
    m[j][j] = 0;
    m[i][j] = 1;
    m[j][i] = 1;
    return m;
  };
  std::vector<Matrix> gens;
  int perm_len = type == RootType::A ? rank : rank - 1;
  for (int i = 0; i < perm_len; ++i) gens.push_back(swap(i, i + 1));
  if (type == RootType::B) {
    Matrix m = identity_matrix(d);
    m[rank - 1][rank - 1] = -1;
    gens.push_back(m);
  } else if (type == RootType::D) {
    Matrix m = identity_matrix(d);
    int a = rank - 2, b = rank - 1;
    m[a][a] = 0;
    m[b][b] = 0;
    m[a][b] = -1;
    m[b][a] = -1;
    gens.push_back(m);
  }
  std::string name = std::string(type == RootType::A ? "A" : type == RootType::B ? "B" : "D") +
                     std::to_string(rank) + "@" + std::to_string(d);
  return ReflectionGroup(QuadraticSpace(d, gram), gens, 10000, name);
}

ReflectionGroup parse_group_spec(const std::string& spec) {
  static const std::regex re(R"(([ABD])(\d+)@(\d+))");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw ParseError("bad group spec '" + spec + "' (expected e.g. A1@2)");
  RootType t = m[1] == "A" ? RootType::A : m[1] == "B" ? RootType::B : RootType::D;
  return build_group(t, std::stoi(m[2]), std::stoi(m[3]));
}

namespace {

BaseNumber json_number(const nlohmann::json& j) {
  if (j.is_number_integer()) return BaseNumber(j.get<long>());
  if (j.is_string()) {
    Scalar s = Scalar::parse(j.get<std::string>());
    if (!s.is_constant() || !s.constant_value().is_rational())
      throw ParseError("custom group entries must be rational; non-crystallographic groups are not supported");
    return s.constant_value();
  }
  throw ParseError("custom group entries must be integers or \"p/q\" strings");
}

Matrix json_matrix(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows)");
  Matrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("expected a matrix row");
    std::vector<BaseNumber> r;
    for (const auto& e : row) r.push_back(json_number(e));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

CustomGroup parse_custom_group(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("custom group: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
    throw ParseError("custom group needs a non-empty \"generators\" array");
  std::vector<Matrix> gens;
  for (const auto& g : doc["generators"]) gens.push_back(json_matrix(g));
  int d = static_cast<int>(gens[0].size());
  Matrix gram = doc.contains("gram") ? json_matrix(doc["gram"]) : identity_matrix(d);
  CustomGroup out;
  out.group = std::make_shared<ReflectionGroup>(QuadraticSpace(d, gram), gens);
  if (doc.contains("kappa_labels")) {
    for (const auto& l : doc["kappa_labels"]) out.kappa_labels.push_back(l.get<std::string>());
    if (static_cast<int>(out.kappa_labels.size()) != out.group->class_count())
      throw ParseError("custom group has " + std::to_string(out.group->class_count()) +
                       " reflection classes but " + std::to_string(out.kappa_labels.size()) + " kappa labels");
  }
  return out;
}

}  // namespace pinosp
