#include "sigcolor/rational.hpp"

#include <stdexcept>

namespace sigcolor {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '/') {
      if (slash != 0 || i == 0 || i + 1 == text.size()) {
        throw std::invalid_argument("malformed rational: " + std::string(text));
      }
      slash = i;
    } else if (!(c >= '0' && c <= '9') && !(c == '-' && i == 0)) {
      throw std::invalid_argument("malformed rational: " + std::string(text));
    }
  }
  Rational r;
  if (r.set_str(std::string(text), 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  r.canonicalize();
  return r;
}

}  // namespace sigcolor
