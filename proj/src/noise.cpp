#include "qec/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qec {

namespace {

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
  }
}

void require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative");
  }
}

}  // namespace

NoiseChannel NoiseChannel::bit_flip(double epsilon) {
  require_probability(epsilon, "epsilon");
  return {ChannelKind::BitFlip, epsilon, 0.0};
}

NoiseChannel NoiseChannel::phase_flip(double epsilon) {
  require_probability(epsilon, "epsilon");
  return {ChannelKind::PhaseFlip, epsilon, 0.0};
}

NoiseChannel NoiseChannel::depolarizing_1q(double epsilon) {
  require_probability(epsilon, "epsilon");
  return {ChannelKind::Depolarizing1q, epsilon, 0.0};
}

NoiseChannel NoiseChannel::depolarizing_2q(double eps2) {
  require_probability(eps2, "eps2");
  return {ChannelKind::Depolarizing2q, eps2, 0.0};
}

NoiseChannel NoiseChannel::phase_damping(double gamma, double t) {
  require_nonnegative(gamma, "gamma");
  require_nonnegative(t, "t");
  return {ChannelKind::PhaseDamping, gamma, t};
}

NoiseChannel NoiseChannel::depolarizing_markov(double gamma_tilde, double t) {
  require_nonnegative(gamma_tilde, "gamma_tilde");
  require_nonnegative(t, "t");
  return {ChannelKind::DepolarizingMarkov, gamma_tilde, t};
}

NoiseChannel NoiseChannel::amplitude_damping(double big_gamma, double t) {
  require_nonnegative(big_gamma, "big_gamma");
  require_nonnegative(t, "t");
  return {ChannelKind::AmplitudeDamping, big_gamma, t};
}

bool NoiseChannel::is_pauli_kind() const {
  return kind == ChannelKind::BitFlip || kind == ChannelKind::PhaseFlip ||
         kind == ChannelKind::Depolarizing1q || kind == ChannelKind::Depolarizing2q;
}

bool NoiseChannel::is_time_parameterized() const {
  return kind == ChannelKind::PhaseDamping || kind == ChannelKind::DepolarizingMarkov ||
         kind == ChannelKind::AmplitudeDamping;
}

std::string NoiseChannel::kind_name() const {
  switch (kind) {
    case ChannelKind::BitFlip:
      return "bit_flip";
    case ChannelKind::PhaseFlip:
      return "phase_flip";
    case ChannelKind::Depolarizing1q:
      return "depolarizing_1q";
    case ChannelKind::Depolarizing2q:
      return "depolarizing_2q";
    case ChannelKind::PhaseDamping:
      return "phase_damping";
    case ChannelKind::DepolarizingMarkov:
      return "depolarizing_markov";
    case ChannelKind::AmplitudeDamping:
      return "amplitude_damping";
  }
  return "?";
}

NoiseChannel NoiseChannel::with_time(double new_t) const {
  if (!is_time_parameterized()) {
    throw std::invalid_argument("with_time: channel is not time-parameterized");
  }
  NoiseChannel c = *this;
  require_nonnegative(new_t, "t");
  c.t = new_t;
  return c;
}

NoiseChannel NoiseChannel::from_config(const std::map<std::string, std::string>& kv) {
  auto get = [&](const std::string& key) -> double {
    auto it = kv.find(key);
    if (it == kv.end()) {
      throw std::invalid_argument("channel config: missing key '" + key + "'");
    }
    return std::stod(it->second);
  };
  auto it = kv.find("kind");
  if (it == kv.end()) throw std::invalid_argument("channel config: missing key 'kind'");
  const std::string& kind = it->second;
  if (kind == "bit_flip") return bit_flip(get("epsilon"));
  if (kind == "phase_flip") return phase_flip(get("epsilon"));
  if (kind == "depolarizing_1q") return depolarizing_1q(get("epsilon"));
  if (kind == "depolarizing_2q") return depolarizing_2q(get("epsilon"));
  if (kind == "phase_damping") return phase_damping(get("gamma"), get("t"));
  if (kind == "depolarizing_markov") return depolarizing_markov(get("gamma_tilde"), get("t"));
  if (kind == "amplitude_damping") return amplitude_damping(get("big_gamma"), get("t"));
  throw std::invalid_argument("channel config: unknown kind '" + kind + "'");
}

PauliOperator sample_pauli_error(std::size_t n, const NoiseChannel& channel,
                                 RngStream& rng) {
  if (channel.kind != ChannelKind::BitFlip && channel.kind != ChannelKind::PhaseFlip &&
      channel.kind != ChannelKind::Depolarizing1q) {
    throw std::invalid_argument("sample_pauli_error: channel must be a 1-qubit Pauli kind");
  }
  double eps = channel.rate;
  BitVec x(n), z(n);
  int phase = 0;
  for (std::size_t q = 0; q < n; ++q) {
    double u = rng.next_double();
    if (u >= eps) continue;
    switch (channel.kind) {
      case ChannelKind::BitFlip:
        x.set(q, true);
        break;
      case ChannelKind::PhaseFlip:
        z.set(q, true);
        break;
      default: {
        // u is uniform on [0, eps): split into thirds for X, Y, Z.
        int which = static_cast<int>(3.0 * u / eps);
        if (which > 2) which = 2;
        if (which != 2) x.set(q, true);
        if (which != 0) z.set(q, true);
        if (which == 1) phase += 1;
        break;
      }
    }
  }
  return PauliOperator(std::move(x), std::move(z), phase);
}

double pauli_pattern_probability(const NoiseChannel& channel, const PauliOperator& p) {
  double eps = channel.rate;
  double prob = 1.0;
  for (std::size_t q = 0; q < p.n(); ++q) {
    char letter = p.letter(q);
    switch (channel.kind) {
      case ChannelKind::BitFlip:
        if (letter == 'I') {
          prob *= 1.0 - eps;
        } else if (letter == 'X') {
          prob *= eps;
        } else {
          return 0.0;
        }
        break;
      case ChannelKind::PhaseFlip:
        if (letter == 'I') {
          prob *= 1.0 - eps;
        } else if (letter == 'Z') {
          prob *= eps;
        } else {
          return 0.0;
        }
        break;
      case ChannelKind::Depolarizing1q:
        prob *= (letter == 'I') ? 1.0 - eps : eps / 3.0;
        break;
      default:
        throw std::invalid_argument(
            "pauli_pattern_probability: channel must be a 1-qubit Pauli kind");
    }
  }
  return prob;
}

double KrausSet::completeness_defect() const {
  if (operators.empty()) throw std::invalid_argument("empty Kraus set");
  Eigen::Index dim = operators[0].rows();
  CMatrix sum = CMatrix::Zero(dim, dim);
  for (const auto& m : operators) sum += m.adjoint() * m;
  return (sum - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

DensityMatrix KrausSet::apply(const DensityMatrix& rho) const {
  if (operators.empty()) throw std::invalid_argument("empty Kraus set");
  if (operators[0].cols() != rho.mat.rows()) {
    throw std::invalid_argument("Kraus set dimension does not match state");
  }
  CMatrix out = CMatrix::Zero(rho.mat.rows(), rho.mat.cols());
  for (const auto& m : operators) out += m * rho.mat * m.adjoint();
  return DensityMatrix{rho.n, out};
}

KrausSet kraus_set(const NoiseChannel& channel) {
  CMatrix id = CMatrix::Identity(2, 2);
  CMatrix x = gate_constant("X");
  CMatrix y = gate_constant("Y");
  CMatrix z = gate_constant("Z");
  switch (channel.kind) {
    case ChannelKind::BitFlip:
      return {{std::sqrt(1.0 - channel.rate) * id, std::sqrt(channel.rate) * x}};
    case ChannelKind::PhaseFlip:
      return {{std::sqrt(1.0 - channel.rate) * id, std::sqrt(channel.rate) * z}};
    case ChannelKind::Depolarizing1q: {
      double p = channel.rate / 3.0;
      return {{std::sqrt(1.0 - channel.rate) * id, std::sqrt(p) * x, std::sqrt(p) * y,
               std::sqrt(p) * z}};
    }
    case ChannelKind::Depolarizing2q: {
      // 16 operators: identity at 1-eps2, each non-identity pair Pauli at eps2/15.
      KrausSet set;
      const CMatrix ops[4] = {id, x, y, z};
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          double p = (a == 0 && b == 0) ? 1.0 - channel.rate : channel.rate / 15.0;
          CMatrix kron(4, 4);
          for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
              kron.block(2 * r, 2 * c, 2, 2) = ops[a](r, c) * ops[b];
            }
          }
          set.operators.push_back(std::sqrt(p) * kron);
        }
      }
      return set;
    }
    case ChannelKind::PhaseDamping: {
      // Matched to the closed form: off-diagonals shrink by eta = e^{-gamma t}.
      double eta = std::exp(-channel.rate * channel.t);
      return {{std::sqrt((1.0 + eta) / 2.0) * id, std::sqrt((1.0 - eta) / 2.0) * z}};
    }
    case ChannelKind::DepolarizingMarkov: {
      // rho -> s rho + (1-s) tr(rho) I/2 with s = e^{-gamma_tilde t}.
      double s = std::exp(-channel.rate * channel.t);
      double w = (1.0 - s) / 4.0;
      return {{std::sqrt(s + w) * id, std::sqrt(w) * x, std::sqrt(w) * y, std::sqrt(w) * z}};
    }
    case ChannelKind::AmplitudeDamping: {
      double lambda = 1.0 - std::exp(-channel.rate * channel.t);
      CMatrix m0 = CMatrix::Zero(2, 2);
      m0(0, 0) = 1.0;
      m0(1, 1) = std::sqrt(1.0 - lambda);
      CMatrix m1 = CMatrix::Zero(2, 2);
      m1(0, 1) = std::sqrt(lambda);
      return {{m0, m1}};
    }
  }
  throw std::invalid_argument("kraus_set: unsupported channel kind");
}

DensityMatrix apply_channel(const DensityMatrix& rho, const NoiseChannel& channel) {
  std::size_t arity = channel.kind == ChannelKind::Depolarizing2q ? 2 : 1;
  if (rho.mat.rows() != (Eigen::Index{1} << arity)) {
    throw std::invalid_argument("apply_channel: density matrix dimension mismatch");
  }
  require_density(rho);

  if (channel.is_pauli_kind()) {
    // Probabilistic Pauli mixture; exact closed form.
    CMatrix x = gate_constant("X");
    CMatrix y = gate_constant("Y");
    CMatrix z = gate_constant("Z");
    double eps = channel.rate;
    switch (channel.kind) {
      case ChannelKind::BitFlip:
        return DensityMatrix{rho.n,
                             (1.0 - eps) * rho.mat + eps * (x * rho.mat * x.adjoint())};
      case ChannelKind::PhaseFlip:
        return DensityMatrix{rho.n,
                             (1.0 - eps) * rho.mat + eps * (z * rho.mat * z.adjoint())};
      case ChannelKind::Depolarizing1q: {
        CMatrix out = (1.0 - eps) * rho.mat;
        out += (eps / 3.0) * (x * rho.mat * x.adjoint());
        out += (eps / 3.0) * (y * rho.mat * y.adjoint());
        out += (eps / 3.0) * (z * rho.mat * z.adjoint());
        return DensityMatrix{rho.n, out};
      }
      default: {
        // Two-qubit depolarizing as the direct probability mixture over all
        // letter pairs; a route independent of the Kraus construction.
        CMatrix out = (1.0 - eps) * rho.mat;
        const char letters[4] = {'I', 'X', 'Y', 'Z'};
        for (int a = 0; a < 4; ++a) {
          for (int b = 0; b < 4; ++b) {
            if (a == 0 && b == 0) continue;
            std::string label{letters[a], letters[b]};
            CMatrix p = pauli_to_dense(PauliOperator::parse(label));
            out += (eps / 15.0) * (p * rho.mat * p.adjoint());
          }
        }
        return DensityMatrix{rho.n, out};
      }
    }
  }

  CMatrix out = rho.mat;
  switch (channel.kind) {
    case ChannelKind::PhaseDamping: {
      double eta = std::exp(-channel.rate * channel.t);
      out(0, 1) *= eta;
      out(1, 0) *= eta;
      return DensityMatrix{rho.n, out};
    }
    case ChannelKind::DepolarizingMarkov: {
      double s = std::exp(-channel.rate * channel.t);
      Complex r00 = rho.mat(0, 0), r11 = rho.mat(1, 1);
      out(0, 0) = (1.0 + s * (r00 - r11)) / 2.0;
      out(1, 1) = (1.0 + s * (r11 - r00)) / 2.0;
      out(0, 1) *= s;
      out(1, 0) *= s;
      return DensityMatrix{rho.n, out};
    }
    case ChannelKind::AmplitudeDamping: {
      double decay = std::exp(-channel.rate * channel.t);
      Complex r11 = rho.mat(1, 1);
      out(0, 0) = rho.mat(0, 0) + (1.0 - decay) * r11;
      out(1, 1) = decay * r11;
      out(0, 1) *= std::sqrt(decay);
      out(1, 0) *= std::sqrt(decay);
      return DensityMatrix{rho.n, out};
    }
    default:
      throw std::invalid_argument("apply_channel: unsupported channel kind");
  }
}

GksMatrix gks_matrix(const NoiseChannel& channel) {
  Eigen::Matrix3cd a = Eigen::Matrix3cd::Zero();
  const Complex i(0.0, 1.0);
  switch (channel.kind) {
    case ChannelKind::PhaseDamping:
      a(2, 2) = channel.rate / 2.0;
      return {a};
    case ChannelKind::DepolarizingMarkov:
      a(0, 0) = a(1, 1) = a(2, 2) = channel.rate / 4.0;
      return {a};
    case ChannelKind::AmplitudeDamping: {
      double g = channel.rate / 4.0;
      a(0, 0) = g;
      a(0, 1) = -i * g;
      a(1, 0) = i * g;
      a(1, 1) = g;
      return {a};
    }
    default:
      throw std::invalid_argument("gks_matrix: channel has no GKS form here");
  }
}

const std::vector<DensityMatrix>& density_basis_1q() {
  static const std::vector<DensityMatrix> basis = [] {
    std::vector<DensityMatrix> b;
    CMatrix zero = CMatrix::Zero(2, 2);
    zero(0, 0) = 1.0;
    CMatrix one = CMatrix::Zero(2, 2);
    one(1, 1) = 1.0;
    CMatrix plus(2, 2);
    plus << 0.5, 0.5, 0.5, 0.5;
    CMatrix plus_i(2, 2);
    plus_i << 0.5, Complex(0, -0.5), Complex(0, 0.5), 0.5;
    b.push_back({1, zero});
    b.push_back({1, one});
    b.push_back({1, plus});
    b.push_back({1, plus_i});
    return b;
  }();
  return basis;
}

std::vector<DensityMatrix> density_basis_2q() {
  std::vector<DensityMatrix> out;
  const auto& b1 = density_basis_1q();
  for (const auto& a : b1) {
    for (const auto& b : b1) {
      CMatrix kron(4, 4);
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          kron.block(2 * r, 2 * c, 2, 2) = a.mat(r, c) * b.mat;
        }
      }
      out.push_back({2, kron});
    }
  }
  return out;
}

double semigroup_deviation(const NoiseChannel& channel, double t1, double t2) {
  if (!channel.is_time_parameterized()) {
    throw std::invalid_argument("semigroup_deviation: channel is not time-parameterized");
  }
  double devmax = 0.0;
  for (const auto& rho : density_basis_1q()) {
    DensityMatrix seq = apply_channel(apply_channel(rho, channel.with_time(t2)),
                                      channel.with_time(t1));
    DensityMatrix joint = apply_channel(rho, channel.with_time(t1 + t2));
    devmax = std::max(devmax, (seq.mat - joint.mat).cwiseAbs().maxCoeff());
  }
  return devmax;
}

}  // namespace qec
