#include "qss/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "json_format.hpp"

namespace qss {

std::size_t pow_size(int p, int m) {
  std::size_t d = 1;
  for (int i = 0; i < m; ++i) {
    if (d > (static_cast<std::size_t>(1) << 50) / static_cast<std::size_t>(p)) {
      throw CapExceeded("p^m overflows the index space");
    }
    d *= static_cast<std::size_t>(p);
  }
  return d;
}

namespace {

void check_cap(int p, int m, std::size_t cap) {
  if (pow_size(p, m) > cap) {
    throw CapExceeded("p^n = " + std::to_string(pow_size(p, m)) +
                      " exceeds the dimension cap " + std::to_string(cap));
  }
}

std::vector<cxd> omega_table(int p) {
  std::vector<cxd> w(p);
  for (int t = 0; t < p; ++t) {
    const double ang = 2.0 * std::numbers::pi * t / p;
    w[t] = cxd(std::cos(ang), std::sin(ang));
  }
  if (p == 2) w[1] = cxd(-1.0, 0.0);  // exact
  return w;
}

void digits_of(std::size_t idx, int p, int m, int* out) {
  for (int j = m - 1; j >= 0; --j) {
    out[j] = static_cast<int>(idx % static_cast<std::size_t>(p));
    idx /= static_cast<std::size_t>(p);
  }
}

}  // namespace

StateVector::StateVector(int p_, int m_) : p(p_), m(m_) {
  check_modulus(p_);
  amps.assign(pow_size(p_, m_), cxd(0.0, 0.0));
}

StateVector::StateVector(int p_, int m_, std::vector<cxd> amps_)
    : p(p_), m(m_), amps(std::move(amps_)) {
  check_modulus(p_);
  if (amps.size() != pow_size(p_, m_)) {
    throw DimensionMismatch("amplitude count does not equal p^m");
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cxd& a : amps) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double nn = norm();
  if (nn == 0.0) throw ValidationError("cannot normalize the zero vector");
  for (cxd& a : amps) a /= nn;
}

void StateVector::canonicalize_phase() {
  for (const cxd& a : amps) {
    if (std::abs(a) > kNullVectorTol) {
      const cxd ph = std::conj(a) / std::abs(a);
      for (cxd& x : amps) x *= ph;
      return;
    }
  }
}

StateVector basis_state(int p, int m, std::size_t index) {
  StateVector v(p, m);
  if (index >= v.dim()) throw DimensionMismatch("basis index out of range");
  v.amps[index] = cxd(1.0, 0.0);
  return v;
}

cxd inner(const StateVector& a, const StateVector& b) {
  if (a.p != b.p || a.m != b.m) throw DimensionMismatch("inner: shape mismatch");
  cxd s(0.0, 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
  return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::abs(inner(a, b));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.p != b.p) throw DimensionMismatch("tensor: p mismatch");
  StateVector out(a.p, a.m + b.m);
  const std::size_t db = b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.amps[i] == cxd(0.0, 0.0)) continue;
    for (std::size_t j = 0; j < db; ++j) {
      out.amps[i * db + j] = a.amps[i] * b.amps[j];
    }
  }
  return out;
}

StateVector apply_pauli(const PauliElement& g, const StateVector& v) {
  if (g.p != v.p || g.n != v.m) throw DimensionMismatch("apply_pauli: shape mismatch");
  const int p = v.p;
  const std::vector<cxd> w = omega_table(p);
  StateVector out(v.p, v.m);
  std::vector<int> d(v.m);
  for (std::size_t idx = 0; idx < v.dim(); ++idx) {
    digits_of(idx, p, v.m, d.data());
    int phase = g.phase_exp;
    std::size_t to = 0;
    for (int j = 0; j < v.m; ++j) {
      phase += g.b[j] * d[j];
      to = to * static_cast<std::size_t>(p) +
           static_cast<std::size_t>((d[j] + g.a[j]) % p);
    }
    out.amps[to] = w[phase % p] * v.amps[idx];
  }
  return out;
}

double DenseOperator::unitarity_residual() const {
  const Eigen::MatrixXcd r =
      mat.adjoint() * mat - Eigen::MatrixXcd::Identity(mat.rows(), mat.cols());
  return r.cwiseAbs().maxCoeff();
}

double DenseOperator::projector_residual() const {
  const Eigen::MatrixXcd herm = mat - mat.adjoint();
  const Eigen::MatrixXcd idem = mat * mat - mat;
  return std::max(herm.cwiseAbs().maxCoeff(), idem.cwiseAbs().maxCoeff());
}

DenseOperator identity_operator(int p, int m) {
  check_modulus(p);
  const std::size_t d = pow_size(p, m);
  DenseOperator op;
  op.p = p;
  op.m = m;
  op.mat = Eigen::MatrixXcd::Identity(d, d);
  return op;
}

namespace {

DenseOperator pauli_matrix_unchecked(const PauliElement& g) {
  const int p = g.p;
  const std::size_t d = pow_size(p, g.n);
  const std::vector<cxd> w = omega_table(p);
  DenseOperator op;
  op.p = p;
  op.m = g.n;
  op.mat = Eigen::MatrixXcd::Zero(d, d);
  std::vector<int> digits(g.n);
  for (std::size_t col = 0; col < d; ++col) {
    digits_of(col, p, g.n, digits.data());
    int phase = g.phase_exp;
    std::size_t row = 0;
    for (int j = 0; j < g.n; ++j) {
      phase += g.b[j] * digits[j];
      row = row * static_cast<std::size_t>(p) +
            static_cast<std::size_t>((digits[j] + g.a[j]) % p);
    }
    op.mat(row, col) = w[phase % p];
  }
  return op;
}

}  // namespace

DenseOperator pauli_matrix(const PauliElement& g, std::size_t dim_cap) {
  check_cap(g.p, g.n, dim_cap);
  return pauli_matrix_unchecked(g);
}

StateVector project_codespace(const StabilizerCode& code, StateVector v) {
  if (code.p != v.p || code.n != v.m) {
    throw DimensionMismatch("project_codespace: shape mismatch");
  }
  for (const PauliElement& g : code.generators) {
    StateVector acc = v;
    StateVector cur = v;
    for (int t = 1; t < code.p; ++t) {
      cur = apply_pauli(g, cur);
      for (std::size_t i = 0; i < acc.dim(); ++i) acc.amps[i] += cur.amps[i];
    }
    const double inv = 1.0 / code.p;
    for (std::size_t i = 0; i < acc.dim(); ++i) acc.amps[i] *= inv;
    v = std::move(acc);
  }
  return v;
}

double codespace_expectation(const StabilizerCode& code, const StateVector& v) {
  const StateVector pv = project_codespace(code, v);
  return std::real(inner(v, pv));
}

std::vector<StateVector> codespace_basis(const StabilizerCode& code,
                                         std::size_t dim_cap) {
  check_cap(code.p, code.n, dim_cap);
  const std::size_t d = pow_size(code.p, code.n);
  const std::size_t target = pow_size(code.p, code.k);
  std::vector<StateVector> basis;
  basis.reserve(target);
  for (std::size_t idx = 0; idx < d && basis.size() < target; ++idx) {
    StateVector v = project_codespace(code, basis_state(code.p, code.n, idx));
    // two Gram-Schmidt sweeps for numerical hygiene
    for (int sweep = 0; sweep < 2; ++sweep) {
      for (const StateVector& b : basis) {
        const cxd c = inner(b, v);
        for (std::size_t i = 0; i < v.dim(); ++i) v.amps[i] -= c * b.amps[i];
      }
    }
    if (v.norm() <= kNullVectorTol) continue;
    v.normalize();
    v.canonicalize_phase();
    basis.push_back(std::move(v));
  }
  if (basis.size() != target) {
    throw ValidationError(
        "codespace has dimension " + std::to_string(basis.size()) +
        ", expected p^k = " + std::to_string(target) +
        " (phase-convention violation in the stabilizer?)");
  }
  return basis;
}

namespace {

struct SubsetIndexing {
  std::vector<std::size_t> strides;  // stride per listed register
  std::vector<std::size_t> offsets;  // embedded index for each local index
  std::vector<std::size_t> bases;    // indices with all listed digits zero
};

SubsetIndexing subset_indexing(int p, int m, const std::vector<int>& J) {
  SubsetIndexing ix;
  const std::size_t d = pow_size(p, m);
  std::vector<bool> used(m, false);
  ix.strides.reserve(J.size());
  for (int j : J) {
    if (j < 1 || j > m) throw ValidationError("register index out of range");
    if (used[j - 1]) throw ValidationError("duplicate register index");
    used[j - 1] = true;
    ix.strides.push_back(pow_size(p, m - j));
  }
  const std::size_t q = J.size();
  const std::size_t dq = pow_size(p, static_cast<int>(q));
  ix.offsets.assign(dq, 0);
  for (std::size_t t = 0; t < dq; ++t) {
    std::size_t rest = t;
    std::size_t off = 0;
    for (std::size_t i = q; i-- > 0;) {
      off += (rest % static_cast<std::size_t>(p)) * ix.strides[i];
      rest /= static_cast<std::size_t>(p);
    }
    ix.offsets[t] = off;
  }
  ix.bases.reserve(d / dq);
  for (std::size_t idx = 0; idx < d; ++idx) {
    bool base = true;
    for (std::size_t s : ix.strides) {
      if ((idx / s) % static_cast<std::size_t>(p) != 0) {
        base = false;
        break;
      }
    }
    if (base) ix.bases.push_back(idx);
  }
  return ix;
}

}  // namespace

StateVector apply_on_subset(const DenseOperator& op, const std::vector<int>& J,
                            const StateVector& v) {
  if (op.p != v.p) throw DimensionMismatch("apply_on_subset: p mismatch");
  if (op.m != static_cast<int>(J.size())) {
    throw DimensionMismatch("apply_on_subset: operator arity != |J|");
  }
  const SubsetIndexing ix = subset_indexing(v.p, v.m, J);
  const std::size_t dq = ix.offsets.size();
  StateVector out(v.p, v.m);
  Eigen::VectorXcd x(dq), y(dq);
  for (std::size_t base : ix.bases) {
    for (std::size_t t = 0; t < dq; ++t) x(t) = v.amps[base + ix.offsets[t]];
    y.noalias() = op.mat * x;
    for (std::size_t t = 0; t < dq; ++t) out.amps[base + ix.offsets[t]] = y(t);
  }
  return out;
}

StateVector reorder_qudits(const StateVector& v, const std::vector<int>& order) {
  if (order.size() != static_cast<std::size_t>(v.m)) {
    throw DimensionMismatch("reorder_qudits: order length != m");
  }
  std::vector<bool> seen(v.m, false);
  for (int o : order) {
    if (o < 0 || o >= v.m || seen[o]) {
      throw ValidationError("reorder_qudits: not a permutation");
    }
    seen[o] = true;
  }
  StateVector out(v.p, v.m);
  std::vector<int> d(v.m);
  for (std::size_t idx = 0; idx < v.dim(); ++idx) {
    digits_of(idx, v.p, v.m, d.data());
    std::size_t to = 0;
    for (int t = 0; t < v.m; ++t) {
      to = to * static_cast<std::size_t>(v.p) +
           static_cast<std::size_t>(d[order[t]]);
    }
    out.amps[to] = v.amps[idx];
  }
  return out;
}

Eigen::MatrixXcd reduced_density_matrix(const StateVector& v,
                                        const std::vector<int>& J) {
  const std::vector<int> js = normalize_index_set(J, v.m);
  const SubsetIndexing ix = subset_indexing(v.p, v.m, js);
  const std::size_t dq = ix.offsets.size();
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dq, dq);
  for (std::size_t base : ix.bases) {
    for (std::size_t r = 0; r < dq; ++r) {
      const cxd vr = v.amps[base + ix.offsets[r]];
      if (vr == cxd(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < dq; ++c) {
        rho(r, c) += vr * std::conj(v.amps[base + ix.offsets[c]]);
      }
    }
  }
  return rho;
}

StateVector partial_inner_prefix(const StateVector& prefix,
                                 const StateVector& full) {
  if (prefix.p != full.p) throw DimensionMismatch("partial inner: p mismatch");
  if (prefix.m > full.m) throw DimensionMismatch("partial inner: prefix too long");
  const int mr = full.m - prefix.m;
  StateVector out(full.p, mr);
  const std::size_t dr = out.dim();
  for (std::size_t i = 0; i < prefix.dim(); ++i) {
    const cxd c = std::conj(prefix.amps[i]);
    if (c == cxd(0.0, 0.0)) continue;
    for (std::size_t j = 0; j < dr; ++j) {
      out.amps[j] += c * full.amps[i * dr + j];
    }
  }
  return out;
}

std::string state_json(const StateVector& v) {
  nlohmann::ordered_json j;
  j["p"] = v.p;
  j["m"] = v.m;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const cxd& a : v.amps) arr.push_back(detail::complex_pair(a));
  j["amps"] = std::move(arr);
  return j.dump();
}

StateVector state_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  StateVector v(j.at("p").get<int>(), j.at("m").get<int>());
  const auto& arr = j.at("amps");
  if (arr.size() != v.dim()) throw ParseError("state JSON: wrong amplitude count");
  for (std::size_t i = 0; i < v.dim(); ++i) {
    v.amps[i] = cxd(arr[i][0].get<double>(), arr[i][1].get<double>());
  }
  return v;
}

std::string operator_json(const DenseOperator& op) {
  nlohmann::ordered_json j;
  j["p"] = op.p;
  j["m"] = op.m;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < op.mat.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < op.mat.cols(); ++c) {
      row.push_back(detail::complex_pair(op.mat(r, c)));
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j.dump();
}

}  // namespace qss
