#include "superchar/root_data.hpp"

#include <algorithm>
#include <sstream>

namespace superchar {

namespace {

void require_same_shape(const Weight& a, const Weight& b) {
  if (a.delta.size() != b.delta.size() || a.eps.size() != b.eps.size())
    throw DomainError(ErrorCode::Range, "weight shape mismatch");
}

bool is_odd_prime(Int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Weight operator+(const Weight& a, const Weight& b) {
  require_same_shape(a, b);
  Weight r = a;
  for (size_t i = 0; i < r.delta.size(); ++i) r.delta[i] += b.delta[i];
  for (size_t i = 0; i < r.eps.size(); ++i) r.eps[i] += b.eps[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  require_same_shape(a, b);
  Weight r = a;
  for (size_t i = 0; i < r.delta.size(); ++i) r.delta[i] -= b.delta[i];
  for (size_t i = 0; i < r.eps.size(); ++i) r.eps[i] -= b.eps[i];
  return r;
}

Weight operator-(const Weight& a) {
  Weight r = a;
  for (auto& x : r.delta) x = -x;
  for (auto& x : r.eps) x = -x;
  return r;
}

Weight operator*(Int c, const Weight& a) {
  Weight r = a;
  for (auto& x : r.delta) x *= c;
  for (auto& x : r.eps) x *= c;
  return r;
}

Int delta_sum(const Weight& w) {
  Int s = 0;
  for (Int x : w.delta) s += x;
  return s;
}

Int eps_sum(const Weight& w) {
  Int s = 0;
  for (Int x : w.eps) s += x;
  return s;
}

HalfWeight operator+(const HalfWeight& a, const HalfWeight& b) {
  if (a.doubled.size() != b.doubled.size())
    throw DomainError(ErrorCode::Range, "half-weight shape mismatch");
  HalfWeight r = a;
  for (size_t i = 0; i < r.doubled.size(); ++i) r.doubled[i] += b.doubled[i];
  return r;
}

HalfWeight operator-(const HalfWeight& a, const HalfWeight& b) {
  if (a.doubled.size() != b.doubled.size())
    throw DomainError(ErrorCode::Range, "half-weight shape mismatch");
  HalfWeight r = a;
  for (size_t i = 0; i < r.doubled.size(); ++i) r.doubled[i] -= b.doubled[i];
  return r;
}

GLContext::GLContext(int m, int n, Int p) : m_(m), n_(n), p_(p) {
  if (m < 1 || n < 1) throw DomainError(ErrorCode::Range, "m and n must be >= 1");
  if (!is_odd_prime(p)) throw DomainError(ErrorCode::BadPrime, "p must be an odd prime >= 3");

  // beta_1 = delta_m - eps_1, beta_2 = delta_m - eps_2, ..., beta_{mn} = delta_1 - eps_n.
  odd_positive_.reserve(static_cast<size_t>(m) * n);
  for (int i = 1; i <= m * n; ++i) {
    int k = (i - 1) / n + 1;
    int l = i - (k - 1) * n;
    odd_positive_.push_back(make_root(m - k + 1, m + l));
  }

  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) even_positive_.push_back(make_root(i, j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) even_positive_.push_back(make_root(m + i, m + j));

  rho0_.doubled.assign(m + n, 0);
  rho1_.doubled.assign(m + n, 0);
  for (int i = 1; i <= m; ++i) {
    rho0_.doubled[i - 1] = m - 2 * i + 1;
    rho1_.doubled[i - 1] = n;
  }
  for (int j = 1; j <= n; ++j) {
    rho0_.doubled[m + j - 1] = n - 2 * j + 1;
    rho1_.doubled[m + j - 1] = -m;
  }
  rho_ = rho0_ - rho1_;
}

Root GLContext::make_root(int from, int to) const {
  if (from < 1 || to < 1 || from > rank() || to > rank() || from == to)
    throw DomainError(ErrorCode::Range, "bad root indices");
  bool odd = (from <= m_) != (to <= m_);
  return Root{from, to, odd};
}

Root GLContext::odd_root(int i) const {
  if (i < 1 || i > odd_count())
    throw DomainError(ErrorCode::Range, "odd root index out of range");
  return odd_positive_[static_cast<size_t>(i) - 1];
}

Weight GLContext::two_rho1_weight() const {
  Weight w;
  w.delta.assign(m_, n_);
  w.eps.assign(n_, -static_cast<Int>(m_));
  return w;
}

bool GLContext::is_dominant(const Weight& w) const {
  if (static_cast<int>(w.delta.size()) != m_ || static_cast<int>(w.eps.size()) != n_)
    throw DomainError(ErrorCode::Range, "weight has wrong shape for this context");
  for (size_t i = 1; i < w.delta.size(); ++i)
    if (w.delta[i - 1] < w.delta[i]) return false;
  for (size_t i = 1; i < w.eps.size(); ++i)
    if (w.eps[i - 1] < w.eps[i]) return false;
  return true;
}

void GLContext::require_dominant(const Weight& w, const char* who) const {
  if (!is_dominant(w))
    throw DomainError(ErrorCode::NotDominant,
                      std::string(who) + ": weight " + format_weight(w) + " is not dominant");
}

Weight GLContext::root_weight(const Root& r) const {
  Weight w;
  w.delta.assign(m_, 0);
  w.eps.assign(n_, 0);
  auto set = [&](int idx, Int v) {
    if (idx <= m_) w.delta[idx - 1] = v;
    else w.eps[idx - m_ - 1] = v;
  };
  set(r.from, 1);
  set(r.to, -1);
  return w;
}

HalfWeight GLContext::to_half(const Weight& w) const {
  if (static_cast<int>(w.delta.size()) != m_ || static_cast<int>(w.eps.size()) != n_)
    throw DomainError(ErrorCode::Range, "weight has wrong shape for this context");
  HalfWeight h;
  h.doubled.reserve(rank());
  for (Int x : w.delta) h.doubled.push_back(2 * x);
  for (Int x : w.eps) h.doubled.push_back(2 * x);
  return h;
}

Weight GLContext::to_weight(const HalfWeight& h) const {
  if (static_cast<int>(h.doubled.size()) != rank())
    throw DomainError(ErrorCode::Range, "half-weight has wrong shape for this context");
  Weight w;
  w.delta.reserve(m_);
  w.eps.reserve(n_);
  for (int i = 0; i < rank(); ++i) {
    check(h.doubled[i] % 2 == 0, "half-weight entry not even in to_weight");
    if (i < m_) w.delta.push_back(h.doubled[i] / 2);
    else w.eps.push_back(h.doubled[i] / 2);
  }
  return w;
}

Rational GLContext::pairing(const HalfWeight& a, const HalfWeight& b) const {
  if (static_cast<int>(a.doubled.size()) != rank() ||
      static_cast<int>(b.doubled.size()) != rank())
    throw DomainError(ErrorCode::Range, "pairing: operands do not match context");
  Int s = 0;
  for (int i = 0; i < m_; ++i) s += a.doubled[i] * b.doubled[i];
  for (int i = m_; i < rank(); ++i) s -= a.doubled[i] * b.doubled[i];
  return Rational(s, 4);
}

Rational GLContext::pairing(const Weight& a, const Weight& b) const {
  return pairing(to_half(a), to_half(b));
}

Int GLContext::root_pairing(const Root& a, const Root& b) const {
  auto sgn = [&](int idx) -> Int { return idx <= m_ ? 1 : -1; };
  Int s = 0;
  if (a.from == b.from) s += sgn(a.from);
  if (a.from == b.to) s -= sgn(a.from);
  if (a.to == b.from) s -= sgn(a.to);
  if (a.to == b.to) s += sgn(a.to);
  return s;
}

Rational GLContext::coroot_pairing(const HalfWeight& mu, const Root& alpha) const {
  if (alpha.odd)
    throw DomainError(ErrorCode::Range,
                      "no coroot for an isotropic odd root " + format_root(alpha, m_));
  if (static_cast<int>(mu.doubled.size()) != rank())
    throw DomainError(ErrorCode::Range, "coroot_pairing: weight does not match context");
  // 2(mu,alpha)/(alpha,alpha) collapses to (d_from - d_to)/2 for both blocks.
  return Rational(mu.doubled[alpha.from - 1] - mu.doubled[alpha.to - 1], 2);
}

Int GLContext::coroot_pairing_int(const HalfWeight& mu, const Root& alpha) const {
  return coroot_pairing(mu, alpha).as_integer();
}

Int GLContext::odd_pairing(const Weight& mu, const Root& beta) const {
  if (!beta.odd) throw DomainError(ErrorCode::Range, "odd_pairing expects an odd root");
  int s = std::min(beta.from, beta.to);
  int t = std::max(beta.from, beta.to);
  // (mu, delta_s - eps_t) = a_s + b_t; the negated root flips the sign.
  Int v = mu.delta[s - 1] + mu.eps[t - m_ - 1];
  return beta.from <= m_ ? v : -v;
}

Int GLContext::shifted_odd_pairing(const Weight& lambda, int i) const {
  Root beta = odd_root(i);
  HalfWeight h = to_half(lambda) + rho_;
  Int v = h.doubled[beta.from - 1] + h.doubled[beta.to - 1];
  check(v % 2 == 0, "(lambda+rho, beta) must be an integer");
  return v / 2;
}

Weight parse_weight(const std::string& text) {
  auto bar = text.find('|');
  if (bar == std::string::npos)
    throw DomainError(ErrorCode::Range, "weight literal needs a '|' separator: " + text);
  auto parse_block = [&](const std::string& part) {
    std::vector<Int> out;
    if (part.empty())
      throw DomainError(ErrorCode::Range, "empty block in weight literal: " + text);
    size_t pos = 0;
    while (pos <= part.size()) {
      size_t comma = part.find(',', pos);
      std::string tok = part.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
      if (tok.empty())
        throw DomainError(ErrorCode::Range, "empty entry in weight literal: " + text);
      size_t used = 0;
      Int v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw DomainError(ErrorCode::Range, "bad integer '" + tok + "' in weight literal");
      }
      if (used != tok.size())
        throw DomainError(ErrorCode::Range, "bad integer '" + tok + "' in weight literal");
      out.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return out;
  };
  Weight w;
  w.delta = parse_block(text.substr(0, bar));
  w.eps = parse_block(text.substr(bar + 1));
  return w;
}

std::string format_weight(const Weight& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.delta.size(); ++i) {
    if (i) os << ',';
    os << w.delta[i];
  }
  os << '|';
  for (size_t i = 0; i < w.eps.size(); ++i) {
    if (i) os << ',';
    os << w.eps[i];
  }
  return os.str();
}

std::string format_root(const Root& r, int m) {
  auto name = [&](int idx) {
    std::ostringstream os;
    if (idx <= m) os << 'd' << idx;
    else os << 'e' << (idx - m);
    return os.str();
  };
  return name(r.from) + "-" + name(r.to);
}

}  // namespace superchar
