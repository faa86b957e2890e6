#include "sumfree/basis_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "sumfree/error.hpp"

namespace sumfree {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(int line, const std::string& why) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

BasisFile parse_basis_text(std::string_view text) {
  std::optional<int> n;
  std::optional<u128> modulus;
  std::vector<std::pair<int, std::string>> body;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.starts_with("n=") || line.starts_with("n =")) {
      const std::string v(trim(line.substr(line.find('=') + 1)));
      try {
        n = std::stoi(v);
      } catch (const std::exception&) {
        bad(lineno, "bad degree '" + v + "'");
      }
      continue;
    }
    if (line.starts_with("modulus")) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) bad(lineno, "expected modulus=<hex>");
      modulus = parse_hex(trim(line.substr(eq + 1)));
      continue;
    }
    body.emplace_back(lineno, std::string(line));
  }
  if (!n) throw Error(ErrorCode::ParseError, "missing n= header");
  if (*n < 1 || *n > Field::kMaxDegree) throw Error(ErrorCode::ParseError, "degree out of range");
  BasisFile out{modulus ? Field(*n, *modulus) : Field::standard(*n), {}};
  for (const auto& [ln, line] : body) {
    if (line.starts_with("0x") || line.starts_with("0X")) {
      try {
        out.rows.push_back(parse_element(line, out.field));
      } catch (const Error& e) {
        bad(ln, e.what());
      }
      continue;
    }
    std::istringstream tok(line);
    std::string d;
    std::uint64_t bits = 0;
    int col = 0;
    while (tok >> d) {
      if (d != "0" && d != "1") bad(ln, "expected 0/1 digits, got '" + d + "'");
      if (col >= *n) bad(ln, "more than n columns");
      if (d == "1") bits |= std::uint64_t{1} << col;
      ++col;
    }
    if (col != *n) bad(ln, "expected " + std::to_string(*n) + " columns, got " + std::to_string(col));
    out.rows.push_back(Fe{bits});
  }
  return out;
}

BasisFile read_basis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_basis_text(ss.str());
}

std::string format_basis_text(const Field& f, const std::vector<Fe>& rows) {
  std::ostringstream out;
  out << "n=" << f.n() << "\nmodulus=" << to_hex(f.modulus()) << "\n";
  for (Fe r : rows) {
    for (int j = 0; j < f.n(); ++j) out << (j ? " " : "") << ((r.bits >> j) & 1);
    out << "\n";
  }
  return out.str();
}

}  // namespace sumfree
