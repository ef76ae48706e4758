#include "toricdd/variables.hpp"

#include <stdexcept>

namespace toricdd {

std::string RVariable::to_string() const {
  return "x[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "]";
}

Term make_term(RVariable a, RVariable b) {
  if (b < a) {
    return {b, a};
  }
  return {a, b};
}

bool diagonal_greater(const Term& a, const Term& b) {
  if (a[0] != b[0]) {
    return a[0] < b[0];
  }
  return a[1] < b[1];
}

std::string to_string(const Term& term) { return term[0].to_string() + "*" + term[1].to_string(); }

RBinomial RBinomial::from_terms(const Term& a_in, const Term& b_in) {
  const Term a = make_term(a_in[0], a_in[1]);
  const Term b = make_term(b_in[0], b_in[1]);
  if (a == b) {
    throw std::invalid_argument("binomial with identical terms");
  }
  if (diagonal_greater(a, b)) {
    return RBinomial{a, b};
  }
  return RBinomial{b, a};
}

int RBinomial::orientation(const Term& a, const Term& b) {
  return diagonal_greater(make_term(a[0], a[1]), make_term(b[0], b[1])) ? 1 : -1;
}

std::string RBinomial::to_string() const { return toricdd::to_string(plus) + " - " + toricdd::to_string(minus); }

}  // namespace toricdd
