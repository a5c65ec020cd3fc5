#include "tautilt/field.hpp"

#include "tautilt/errors.hpp"

namespace tautilt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonAdmissible: return "NonAdmissible";
    case ErrorKind::EmptyQuiver: return "EmptyQuiver";
    case ErrorKind::InvalidPresentation: return "InvalidPresentation";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::InvalidModule: return "InvalidModule";
    case ErrorKind::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorKind::DecompositionInconclusive: return "DecompositionInconclusive";
    case ErrorKind::ApproximationVerificationFailed: return "ApproximationVerificationFailed";
    case ErrorKind::NotTauRigid: return "NotTauRigid";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::NotBasic: return "NotBasic";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::ExchangeAssertionFailed: return "ExchangeAssertionFailed";
    case ErrorKind::HasseMismatch: return "HasseMismatch";
    case ErrorKind::Inconclusive: return "Inconclusive";
    case ErrorKind::MutationMismatch: return "MutationMismatch";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::InvalidPosition: return "InvalidPosition";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

Field Field::prime(const mpz_class& p) {
  if (p <= 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    throw Error(ErrorKind::ParseError, "field characteristic must be a prime > 2, got " + p.get_str());
  }
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

bool Field::characteristic_exceeds(std::size_t n) const {
  if (kind_ == Kind::Rational) return true;
  return p_ > mpz_class(static_cast<unsigned long>(n));
}

Scalar Field::reduce(const Scalar& x) const {
  if (kind_ == Kind::Rational) return x;
  mpz_class num = x.get_num();
  const mpz_class& den = x.get_den();
  if (den != 1) {
    mpz_class inv_den;
    if (mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t()) == 0) {
      throw Error(ErrorKind::ParseError, "denominator divisible by the characteristic");
    }
    num *= inv_den;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t());
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw std::domain_error("division by zero in field arithmetic");
  if (kind_ == Kind::Rational) return 1 / a;
  mpz_class r;
  mpz_class n = reduce(a).get_num();
  mpz_invert(r.get_mpz_t(), n.get_mpz_t(), p_.get_mpz_t());
  return Scalar(r);
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  Scalar q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw Error(ErrorKind::ParseError, "invalid coefficient '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return reduce(q);
}

std::string Field::format(const Scalar& x) const { return reduce(x).get_str(); }

}  // namespace tautilt
