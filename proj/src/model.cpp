#include "qops/model.hpp"

#include <sstream>
#include <vector>

namespace qops {

std::string Model::describe() const {
  std::ostringstream os;
  switch (kind) {
    case ModelKind::sphere:
      os << "sphere:" << dim;
      break;
    case ModelKind::sphere_zero:
      os << "sphere_zero";
      break;
    case ModelKind::stunted:
      os << "stunted:" << bottom << "," << shift;
      break;
  }
  if (loop_bound) os << ":bound=" << *loop_bound;
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

long parse_long(const std::string& s, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty())
    throw std::invalid_argument(std::string("cannot parse ") + what + ": '" +
                                s + "'");
  return v;
}

std::optional<long> parse_bound_part(const std::string& part) {
  const std::string prefix = "bound=";
  if (part.rfind(prefix, 0) != 0)
    throw std::invalid_argument("expected 'bound=N', got '" + part + "'");
  return parse_long(part.substr(prefix.size()), "loop bound");
}

}  // namespace

Model parse_model(const std::string& text) {
  std::vector<std::string> parts = split(text, ':');
  const std::string& head = parts[0];
  if (head == "sphere_zero") {
    if (parts.size() != 1)
      throw std::invalid_argument("sphere_zero takes no parameters");
    return Model::sphere_zero();
  }
  if (head == "sphere") {
    if (parts.size() < 2 || parts.size() > 3)
      throw std::invalid_argument("expected sphere:N or sphere:N:bound=L");
    int n = static_cast<int>(parse_long(parts[1], "sphere dimension"));
    std::optional<long> bound;
    if (parts.size() == 3) bound = parse_bound_part(parts[2]);
    return Model::sphere(n, bound);
  }
  if (head == "stunted") {
    if (parts.size() < 2 || parts.size() > 3)
      throw std::invalid_argument(
          "expected stunted:K,M or stunted:K,M:bound=L");
    std::vector<std::string> km = split(parts[1], ',');
    if (km.size() != 2)
      throw std::invalid_argument("stunted needs bottom,shift as 'K,M'");
    int k0 = static_cast<int>(parse_long(km[0], "bottom index"));
    int m = static_cast<int>(parse_long(km[1], "suspension shift"));
    std::optional<long> bound;
    if (parts.size() == 3) bound = parse_bound_part(parts[2]);
    return Model::stunted(k0, m, bound);
  }
  throw std::invalid_argument("unknown model '" + text + "'");
}

}  // namespace qops
