#include "poincare/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>

namespace poincare {
namespace {

std::string format_number(const ojson& v) {
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  double d = v.get<double>();
  if (std::isnan(d)) return "\"nan\"";
  if (std::isinf(d)) return d > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

}  // namespace

std::string to_json_string(const ojson& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case ojson::value_t::null:
      return "null";
    case ojson::value_t::boolean:
      return v.get<bool>() ? "true" : "false";
    case ojson::value_t::string:
      return ojson(v.get<std::string>()).dump();
    case ojson::value_t::number_integer:
    case ojson::value_t::number_unsigned:
    case ojson::value_t::number_float:
      return format_number(v);
    case ojson::value_t::array: {
      if (v.empty()) return "[]";
      std::string out = "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += pad_in + to_json_string(v[i], indent + 1);
        out += (i + 1 < v.size()) ? ",\n" : "\n";
      }
      return out + pad + "]";
    }
    case ojson::value_t::object: {
      if (v.empty()) return "{}";
      std::string out = "{\n";
      std::size_t i = 0;
      for (auto it = v.begin(); it != v.end(); ++it, ++i) {
        out += pad_in + ojson(it.key()).dump() + ": " + to_json_string(it.value(), indent + 1);
        out += (i + 1 < v.size()) ? ",\n" : "\n";
      }
      return out + pad + "}";
    }
    default:
      return "null";
  }
}

std::string timestamp_iso8601() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

}  // namespace poincare
