#include "towercalc/cli/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace towercalc::cli {

bool RunReport::passed() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const Certificate& c) { return c.passed; });
}

std::string RunReport::text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "inputs: sha256:" << inputs_digest << "\n";
  for (const auto& [key, value] : results.items()) {
    if (value.is_string())
      os << key << ": " << value.get<std::string>() << "\n";
    else
      os << key << ": " << value.dump() << "\n";
  }
  for (const auto& c : certificates) os << c.render();
  os << "verdict: " << (passed() ? "PASS" : "FAIL") << "\n";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  os << "time: " << buf << " s\n";
  return os.str();
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["check"] = c.check;
  j["passed"] = c.passed;
  if (c.level) j["level"] = *c.level;
  if (c.degree) j["degree"] = *c.degree;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.children.empty()) {
    Json kids = Json::array();
    for (const auto& k : c.children) kids.push_back(certificate_to_json(k));
    j["children"] = std::move(kids);
  }
  return j;
}

std::string RunReport::machine() const {
  Json j;
  j["command"] = command;
  j["inputs_digest"] = inputs_digest;
  j["results"] = results;
  Json certs = Json::array();
  for (const auto& c : certificates) certs.push_back(certificate_to_json(c));
  j["certificates"] = std::move(certs);
  j["verdict"] = passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

}  // namespace towercalc::cli
