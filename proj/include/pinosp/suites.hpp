#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pinosp/supercentralizer.hpp"

namespace pinosp {

/// A group together with the name it was loaded under ("A2@3", "custom:<file>").
struct GroupConfig {
  std::string name;
  std::shared_ptr<const ReflectionGroup> group;
  std::vector<std::string> kappa_labels;
};

/// "A1@2", "B2@2", ... or "custom:<path>" (JSON group file). Throws ParseError.
GroupConfig load_group(const std::string& spec);

/// Symbolic deformation parameters or one numeric value per class.
struct KappaMode {
  bool symbolic = true;
  std::vector<BaseNumber> values;

  /// "symbolic" or a comma separated list of scalars ("1,-1/2", "1+2i").
  static KappaMode parse(const std::string& text);
  std::string label() const;
};

/// Throws std::invalid_argument if the number of numeric values does not
/// match the number of reflection classes.
AlgebraPtr make_algebra(const GroupConfig& config, const KappaMode& kappa);

/// Everything an identity builder needs, shared by all cases of one run.
class Workspace {
 public:
  explicit Workspace(AlgebraPtr ctx);

  const AlgebraPtr& ctx() const { return ctx_; }
  const Supercentralizer& sc() const { return sc_; }
  const Osp& osp() const { return sc_.osp(); }
  int dim() const { return ctx_->dim(); }
  bool orthonormal() const { return ctx_->space().is_orthonormal(); }

  Covector x(int i) const;  // x_i, 1-based
  Vector y(int i) const;    // y_i, 1-based
  /// n covectors: x_1..x_n when n <= d, otherwise sums of basis covectors.
  std::vector<Covector> tuple(int n) const;
  std::vector<Covector> xs(const std::vector<int>& idx) const;

  Scalar B(const Covector& u, const Covector& v) const { return ctx_->space().bilinear(u, v); }
  Element num(const Scalar& c) const { return Element::scalar(ctx_, c); }
  Element zero() const { return Element(ctx_); }
  Element lin(const CoordVector& u) const { return Element::linear(ctx_, u); }
  Element beta(const CoordVector& u) const { return Element::linear(ctx_, ctx_->space().beta(u)); }
  Element gamma(const Covector& u) const { return Element::gamma(ctx_, u); }
  Element group(int g) const { return Element::group(ctx_, g); }
  Element ocal(const Covector& u) const { return sc_.ocal(u); }
  Element M(const Covector& u, const Covector& v) const { return sc_.M(u, v); }
  Element O(const std::vector<Covector>& us) const { return sc_.O(us); }
  Element Oi(const std::vector<int>& idx) const { return sc_.O(xs(idx)); }
  /// psi_kappa^B(u, v) = 2 sum_s B(alpha_s, u) B(v, alpha_s) / B(alpha_s, alpha_s) kappa(s) s.
  Element psi(const Covector& u, const Covector& v) const;

 private:
  AlgebraPtr ctx_;
  Supercentralizer sc_;
};

/// lhs = rhs; the residual is lhs - rhs.
struct Equation {
  Element lhs, rhs;
};

struct IdentityCase {
  std::string id;
  std::string anchor;
  int min_dim = 1;
  bool needs_orthonormal = false;
  std::function<std::vector<Equation>(const Workspace&)> build;

  std::string suite() const { return id.substr(0, id.find('.')); }
};

/// Every identity, sorted by id.
const std::vector<IdentityCase>& catalog();
/// Distinct suite ids in catalog order, without "all".
std::vector<std::string> suite_ids();
const IdentityCase* find_case(const std::string& id);

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct SuiteReport {
  std::string id;
  std::string anchor;
  std::string group;
  int dim = 0;
  std::string kappa;
  Status status = Status::skipped;
  std::size_t residual_terms = 0;
  std::string witness;  // failing equation and largest residual word
  std::string reason;   // why a case was skipped or errored
  double ms = 0;
  std::optional<bool> oracle;  // set when oracle evaluation ran
};

struct RunOptions {
  int jobs = 1;
  bool oracle = false;  // also act on oracle samples
  std::uint64_t seed = 7;
  int oracle_samples = 4;
  int max_degree = 3;
  bool timing = true;  // false zeroes elapsed times for byte-stable output
};

/// Runs one suite, "all", or a single case id. Throws std::invalid_argument on
/// an unknown suite.
std::vector<SuiteReport> run_suite(const std::string& suite, const GroupConfig& config, const KappaMode& kappa,
                                   const RunOptions& options = {});
SuiteReport run_case(const IdentityCase& c, const Workspace& ws, const GroupConfig& config, const KappaMode& kappa,
                     const RunOptions& options);

/// Ids used by the oracle cross-check, in order.
const std::vector<std::string>& oracle_probe_ids();

struct CrosscheckOptions {
  std::uint64_t seed = 7;
  int samples = 100;
  int max_degree = 3;
  int residuals = 20;
  int products = 50;
  bool mutate = false;  // perturb the first residual by +1; the check must then fail
};

/// Compares engine and oracle: both sides of catalog identities act alike on
/// every sampled vector, and act(a b, v) = act(a, act(b, v)) for random a, b.
SuiteReport run_oracle_crosscheck(const GroupConfig& config, const KappaMode& kappa, const CrosscheckOptions& options);

/// Seeded random element with up to `terms` words of x/y degree <= max_degree.
Element random_element(const AlgebraPtr& ctx, std::mt19937_64& rng, int terms, int max_degree);

std::string report_json(const std::vector<SuiteReport>& reports);
std::string report_table(const std::vector<SuiteReport>& reports);

}  // namespace pinosp
