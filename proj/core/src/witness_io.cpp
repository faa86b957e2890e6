#include <fstream>
#include <string>

#include "json.hpp"
#include "sumfree/error.hpp"
#include "sumfree/zerosum.hpp"

namespace sumfree {

using nlohmann::ordered_json;

std::string witness_to_json(const Witness& w) {
  ordered_json j;
  j["n"] = w.n;
  j["modulus"] = to_hex(w.modulus);
  j["k"] = w.k;
  auto rows = ordered_json::array();
  for (std::uint64_t r : w.basis) rows.push_back(to_hex(r));
  j["basis"] = std::move(rows);
  j["checks"] = {{"inverse_sum", w.checks.inverse_sum}, {"fk", w.checks.fk}, {"theta", w.checks.theta}};
  j["strategy"] = strategy_name(w.strategy);
  j["seed"] = w.seed;
  j["trials"] = w.trials;
  return j.dump();
}

Witness witness_from_json(std::string_view line) {
  try {
    const ordered_json j = ordered_json::parse(line);
    Witness w;
    w.n = j.at("n").get<int>();
    w.modulus = parse_hex(j.at("modulus").get<std::string>());
    w.k = j.at("k").get<int>();
    for (const auto& r : j.at("basis")) w.basis.push_back(static_cast<std::uint64_t>(parse_hex(r.get<std::string>())));
    const auto& c = j.at("checks");
    w.checks = {c.at("inverse_sum").get<bool>(), c.at("fk").get<bool>(), c.at("theta").get<bool>()};
    w.strategy = parse_strategy(j.at("strategy").get<std::string>());
    w.seed = j.at("seed").get<std::uint64_t>();
    w.trials = j.at("trials").get<std::uint64_t>();
    return w;
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad witness record: ") + e.what());
  }
}

std::vector<Witness> read_witness_store(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open witness store " + path);
  std::vector<Witness> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(witness_from_json(line));
  }
  return out;
}

void append_witness(const std::string& path, const Witness& w) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorCode::ParseError, "cannot open witness store " + path);
  out << witness_to_json(w) << '\n';
}

}  // namespace sumfree
