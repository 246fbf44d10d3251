#include "queens/weighting.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>

namespace queens {

namespace {

const Rat kZero = 0;
const Rat kOne = 1;

[[noreturn]] void bad_input(const std::string& what) {
  throw std::invalid_argument(what);
}

}  // namespace

// Weights rescaled to a shared int64 denominator when that fits; covering a
// 10^4 board means ~10^8 exact sums, which plain mpq would do 20x slower.
struct ScaledWeights {
  bool usable = false;
  long long den = 1;
  std::vector<long long> num;

  explicit ScaledWeights(const LineWeighting& w) {
    mpz_class lcm_z = 1;
    for (const Rat& q : w.weights_) {
      if (q.get_num() == 0) continue;
      mpz_lcm(lcm_z.get_mpz_t(), lcm_z.get_mpz_t(), q.get_den().get_mpz_t());
      if (!lcm_z.fits_slong_p()) return;  // fall back to mpq sums
    }
    den = lcm_z.get_si();
    if (den > (1LL << 60)) return;
    num.reserve(w.weights_.size());
    for (const Rat& q : w.weights_) {
      mpz_class scaled = q.get_num() * (lcm_z / q.get_den());
      num.push_back(scaled.get_si());  // |num| <= den since weights lie in [0,1]
    }
    usable = true;
  }
};

LineWeighting::LineWeighting(int n) : n_(n), weights_(static_cast<std::size_t>(line_count(n)), kZero) {
  if (n < 1) bad_input("board size must be positive");
}

const Rat& LineWeighting::at(LineId line) const { return weights_[line_ordinal(line, n_)]; }

void LineWeighting::set(LineId line, Rat w) {
  if (w < kZero || w > kOne) bad_input("line weight outside [0,1]: " + rat_str(w));
  weights_[line_ordinal(line, n_)] = std::move(w);
}

Rat LineWeighting::value() const {
  Rat total = 0;
  for (const Rat& w : weights_) total += w;
  return total;
}

void LineWeighting::for_each_nonzero(const std::function<void(LineId, const Rat&)>& fn) const {
  for (std::size_t ord = 0; ord < weights_.size(); ++ord) {
    if (weights_[ord].get_num() != 0) fn(line_from_ordinal(ord, n_), weights_[ord]);
  }
}

CoverReport covers(const LineWeighting& w, std::span<const Square> squares) {
  const int n = w.n();
  const ScaledWeights scaled(w);
  for (const Square& sq : squares) {
    require_square(sq, n);
    const auto lines = lines_through(sq, n);
    if (scaled.usable) {
      long long sum = 0;
      for (LineId line : lines) sum += scaled.num[line_ordinal(line, n)];
      if (sum < scaled.den) return {false, sq};
    } else {
      Rat sum = 0;
      for (LineId line : lines) sum += w.at(line);
      if (sum < kOne) return {false, sq};
    }
  }
  return {true, std::nullopt};
}

bool certify_incompletable(const PartialConfig& cfg, const LineWeighting& w) {
  if (w.n() != cfg.n()) bad_input("certificate board size does not match configuration");
  const auto lambda = unattacked(cfg);
  if (!covers(w, lambda).covered) return false;
  return w.value() < Rat(cfg.n() - cfg.size());
}

Rat FractionalCompletion::total() const {
  Rat sum = 0;
  for (const auto& [sq, q] : mass) sum += q;
  return sum;
}

FeasibilityReport fractional_feasible(const FractionalCompletion& fc, const PartialConfig& cfg) {
  if (fc.n != cfg.n()) return {false, "board size mismatch"};
  AttackTable attacked(cfg.n());
  for (const Square& q : cfg.queens()) attacked.add(q);
  std::map<std::size_t, Rat> line_mass;
  for (const auto& [sq, q] : fc.mass) {
    require_square(sq, fc.n);
    if (q < kZero) return {false, "negative mass at (" + std::to_string(sq.row) + "," +
                                      std::to_string(sq.col) + ")"};
    if (attacked.attacked(sq))
      return {false, "mass on attacked square (" + std::to_string(sq.row) + "," +
                         std::to_string(sq.col) + ")"};
    for (LineId line : lines_through(sq, fc.n)) line_mass[line_ordinal(line, fc.n)] += q;
  }
  for (const auto& [ord, total] : line_mass) {
    if (total > kOne) {
      const LineId line = line_from_ordinal(ord, fc.n);
      return {false, "line mass " + rat_str(total) + " exceeds 1 on line kind " +
                         std::to_string(static_cast<int>(line.kind)) + " index " +
                         std::to_string(line.index)};
    }
  }
  return {true, ""};
}

namespace {

std::string line_tag(LineKind kind) {
  switch (kind) {
    case LineKind::Row: return "row";
    case LineKind::Col: return "col";
    case LineKind::DiagPlus: return "diag+";
    case LineKind::DiagMinus: return "diag-";
  }
  bad_input("bad line kind");
}

LineKind parse_tag(const std::string& tag) {
  if (tag == "row") return LineKind::Row;
  if (tag == "col") return LineKind::Col;
  if (tag == "diag+") return LineKind::DiagPlus;
  if (tag == "diag-") return LineKind::DiagMinus;
  bad_input("certificate document: unknown line tag '" + tag + "'");
}

}  // namespace

std::string to_certificate_json(const PartialConfig& cfg, const LineWeighting& w) {
  if (w.n() != cfg.n()) bad_input("certificate board size does not match configuration");
  nlohmann::json doc;
  doc["n"] = cfg.n();
  auto& config = doc["config"] = nlohmann::json::array();
  for (const Square& sq : cfg.queens()) config.push_back({sq.row, sq.col});
  auto& weights = doc["weights"] = nlohmann::json::array();
  w.for_each_nonzero([&](LineId line, const Rat& q) {
    weights.push_back({line_tag(line.kind), line.index, q.get_num().get_str(),
                       q.get_den().get_str()});
  });
  doc["value"] = rat_str(w.value());
  return doc.dump();
}

Certificate parse_certificate_json(const std::string& text) {
  try {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
      bad_input("certificate document: missing integer field \"n\"");
    const int n = doc["n"].get<int>();

    std::vector<Square> queens;
    for (const auto& item : doc.value("config", nlohmann::json::array())) {
      if (!item.is_array() || item.size() != 2)
        bad_input("certificate document: bad config entry");
      queens.push_back({item[0].get<int>(), item[1].get<int>()});
    }

    Certificate cert{PartialConfig(n, std::move(queens)), LineWeighting(n), Rat(0)};
    if (!doc.contains("weights") || !doc["weights"].is_array())
      bad_input("certificate document: missing \"weights\" list");
    for (const auto& item : doc["weights"]) {
      if (!item.is_array() || item.size() != 4)
        bad_input("certificate document: weight entries are [tag, index, num, den]");
      const LineKind kind = parse_tag(item[0].get<std::string>());
      const int index = item[1].get<int>();
      const mpz_class num(item[2].get<std::string>());
      const mpz_class den(item[3].get<std::string>());
      if (den == 0) bad_input("certificate document: zero denominator");
      Rat w(num, den);
      w.canonicalize();
      cert.weights.set({kind, index}, w);
    }
    if (!doc.contains("value") || !doc["value"].is_string())
      bad_input("certificate document: missing rational string \"value\"");
    cert.declared_value = rat_parse(doc["value"].get<std::string>());
    return cert;
  } catch (const nlohmann::json::exception& e) {
    bad_input(std::string("certificate document: ") + e.what());
  }
}

VerifyReport verify_certificate(const Certificate& cert) {
  const auto lambda = unattacked(cert.config);
  const CoverReport cover = covers(cert.weights, lambda);
  if (!cover.covered) {
    const Square sq = *cover.first_violation;
    return {false, "unattacked square (" + std::to_string(sq.row) + "," + std::to_string(sq.col) +
                       ") is not covered"};
  }
  const Rat actual = cert.weights.value();
  const Rat needed(cert.config.n() - cert.config.size());
  if (!(actual < needed))
    return {false, "value " + rat_str(actual) + " is not below n - |Q'| = " + rat_str(needed)};
  if (actual != cert.declared_value)
    return {false, "declared value " + rat_str(cert.declared_value) +
                       " does not match the weights, which sum to " + rat_str(actual)};
  return {true, "covers all " + std::to_string(lambda.size()) + " unattacked squares with value " +
                    rat_str(actual) + " < " + rat_str(needed)};
}

}  // namespace queens
