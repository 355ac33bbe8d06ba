#include "towercalc/certificate.hpp"

#include <sstream>
#include <utility>

namespace towercalc {

Certificate Certificate::pass(std::string check, std::string detail) {
  Certificate c;
  c.check = std::move(check);
  c.detail = std::move(detail);
  return c;
}

Certificate Certificate::fail(std::string check, std::string detail) {
  Certificate c;
  c.check = std::move(check);
  c.passed = false;
  c.detail = std::move(detail);
  return c;
}

Certificate& Certificate::add(Certificate child) {
  if (!child.passed) {
    if (passed) {
      if (!level) level = child.level;
      if (!degree) degree = child.degree;
    }
    passed = false;
  }
  children.push_back(std::move(child));
  return *this;
}

const Certificate* Certificate::first_failure() const {
  if (passed) return nullptr;
  for (const auto& c : children)
    if (const Certificate* f = c.first_failure()) return f;
  return this;
}

std::string Certificate::render(int indent) const {
  std::ostringstream os;
  os << std::string(static_cast<std::size_t>(indent) * 2, ' ') << (passed ? "[pass] " : "[FAIL] ")
     << check;
  if (level) os << " level=" << *level;
  if (degree) os << " degree=" << *degree;
  if (!detail.empty()) os << " : " << detail;
  os << '\n';
  for (const auto& c : children) os << c.render(indent + 1);
  return os.str();
}

}  // namespace towercalc
