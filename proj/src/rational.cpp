#include "semimono/rational.hpp"

#include <utility>

namespace semimono {

Rational make_rational(BigInt num, BigInt den) {
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

std::string fraction_str(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace semimono
