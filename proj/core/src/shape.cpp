#include "toricdd/shape.hpp"

#include <stdexcept>

namespace toricdd {

Shape::Shape(int m, int n, int r) : m_(m), n_(n), r_(r) {
  if (m < 1 || n < 1 || r < 1) {
    throw std::invalid_argument("shape parameters must be positive, got " + to_string());
  }
}

std::string Shape::to_string() const {
  return "(" + std::to_string(m_) + "," + std::to_string(n_) + "," + std::to_string(r_) + ")";
}

}  // namespace toricdd
