#include "reesnorm/format.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace reesnorm {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& token, bool allow_negative) {
  const std::string t = trim(token);
  if (t.empty()) throw std::invalid_argument("empty integer token");
  size_t start = 0;
  if (t[0] == '-') {
    if (!allow_negative) throw std::invalid_argument("negative value not allowed: " + t);
    start = 1;
  } else if (t[0] == '+') {
    start = 1;
  }
  if (start == t.size()) throw std::invalid_argument("malformed integer: " + t);
  for (size_t i = start; i < t.size(); ++i) {
    if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("malformed integer: " + t);
  }
  return Int(t);
}

}  // namespace

std::vector<Int> parse_int_csv(const std::string& text) {
  std::vector<Int> out;
  std::string token;
  std::istringstream in(text);
  if (trim(text).empty()) throw std::invalid_argument("empty integer list");
  while (std::getline(in, token, ',')) out.push_back(parse_int(token, true));
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

Vec parse_positive_csv(const std::string& text) {
  Vec out = parse_int_csv(text);
  for (const Int& v : out) {
    if (v <= 0) throw std::invalid_argument("entries must be positive integers");
  }
  return out;
}

Vec parse_nonneg_csv(const std::string& text) {
  Vec out = parse_int_csv(text);
  for (const Int& v : out) {
    if (v < 0) throw std::invalid_argument("entries must be nonnegative integers");
  }
  return out;
}

std::vector<Vec> parse_ideal_stream(std::istream& in) {
  std::vector<Vec> rows;
  std::string line;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    Vec row;
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) row.push_back(parse_int(token, false));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw std::invalid_argument("generator rows have inconsistent lengths");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Vec> parse_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return parse_ideal_stream(in);
}

std::string render_vec(const Vec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].get_str();
  }
  return out;
}

std::string render_generators(const std::vector<Vec>& gens) {
  std::string out;
  for (const Vec& g : gens) {
    out += render_vec(g);
    out += '\n';
  }
  return out;
}

std::string render_rees_table(const std::vector<ReesGenerator>& gens) {
  std::string out;
  for (const ReesGenerator& g : gens) {
    out += render_vec(g.a);
    out += ' ';
    out += g.d.get_str();
    out += '\n';
  }
  return out;
}

std::string render_rees_csv(int n, const std::vector<ReesGenerator>& gens) {
  std::string out;
  for (int i = 1; i <= n; ++i) {
    out += 'a';
    out += std::to_string(i);
    out += ',';
  }
  out += "d,type\n";
  for (const ReesGenerator& g : gens) {
    for (const Int& ai : g.a) {
      out += ai.get_str();
      out += ',';
    }
    out += g.d.get_str();
    out += ',';
    out += std::to_string(g.gen_type);
    out += '\n';
  }
  return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_int(const Int& v) {
  if (v.fits_slong_p()) return ordered_json(v.get_si());
  return ordered_json(v.get_str());
}

ordered_json json_vec(const Vec& v) {
  ordered_json arr = ordered_json::array();
  for (const Int& x : v) arr.push_back(json_int(x));
  return arr;
}

ordered_json json_generator(const ReesGenerator& g) {
  ordered_json obj;
  obj["a"] = json_vec(g.a);
  obj["d"] = json_int(g.d);
  obj["type"] = g.gen_type;
  return obj;
}

}  // namespace

std::string rees_report_json(const LambdaSystem& sys, const std::vector<ReesGenerator>& gens,
                             const ReesNormalityVerdict& verdict) {
  ordered_json doc;
  doc["lambda"] = json_vec(sys.lambda);
  doc["L"] = json_int(sys.L);
  doc["omega"] = json_vec(sys.omega);
  doc["ell"] = json_int(sys.ell);
  doc["lambda_prime"] = json_vec(sys.lambda_prime);
  ordered_json arr = ordered_json::array();
  for (const ReesGenerator& g : gens) arr.push_back(json_generator(g));
  doc["generators"] = arr;
  doc["normal"] = verdict.normal;
  if (!verdict.normal) doc["witness"] = json_generator(verdict.witness);
  return doc.dump(2) + "\n";
}

}  // namespace reesnorm
