#include "tokenlab/cli/report.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>
#include <sstream>

namespace tokenlab::cli {

namespace {

std::array<std::string, 9> cells(const VerificationRow& r) {
  return {r.family,
          r.op,
          std::to_string(r.m),
          std::to_string(r.vertices),
          std::to_string(r.formula),
          std::to_string(r.alpha),
          r.witness ? std::to_string(*r.witness) : std::string(),
          to_string(r.status),
          std::to_string(r.ms)};
}

} // namespace

std::string render_csv(const std::vector<VerificationRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    const auto c = cells(r);
    for (std::size_t i = 0; i < c.size(); ++i)
      out << (i ? "," : "") << c[i];
    out << '\n';
  }
  return out.str();
}

std::string render_json(const std::vector<VerificationRow>& rows) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["family"] = r.family;
    row["operator"] = r.op;
    row["m"] = r.m;
    row["vertices"] = r.vertices;
    row["formula"] = r.formula;
    row["alpha"] = r.alpha;
    row["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
    row["status"] = to_string(r.status);
    row["ms"] = r.ms;
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::string render_table(const std::vector<VerificationRow>& rows) {
  const std::array<std::string, 9> header{"family", "operator", "m",      "vertices", "formula",
                                          "alpha",  "witness",  "status", "ms"};
  std::array<std::size_t, 9> width{};
  for (std::size_t i = 0; i < header.size(); ++i)
    width[i] = header[i].size();
  std::vector<std::array<std::string, 9>> body;
  for (const auto& r : rows) {
    body.push_back(cells(r));
    if (!r.witness)
      body.back()[6] = "-";
    for (std::size_t i = 0; i < width.size(); ++i)
      width[i] = std::max(width[i], body.back()[i].size());
  }

  std::ostringstream out;
  auto line = [&](const std::array<std::string, 9>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const auto pad = std::string(width[i] - c[i].size(), ' ');
      // numbers right-aligned, text left-aligned
      const bool numeric = i >= 2 && i != 7;
      out << (i ? "  " : "") << (numeric ? pad + c[i] : c[i] + (i + 1 < c.size() ? pad : ""));
    }
    out << '\n';
  };
  line(header);
  std::size_t total = 2 * (width.size() - 1);
  for (auto w : width)
    total += w;
  out << std::string(total, '-') << '\n';
  for (const auto& c : body)
    line(c);

  const auto ok = std::count_if(rows.begin(), rows.end(),
                                [](const VerificationRow& r) { return r.status == RowStatus::ok; });
  out << ok << "/" << rows.size() << " rows ok\n";
  return out.str();
}

std::string render(const std::vector<VerificationRow>& rows, Format format) {
  switch (format) {
  case Format::csv: return render_csv(rows);
  case Format::json: return render_json(rows);
  case Format::table: return render_table(rows);
  case Format::dot: break;
  }
  throw ConfigError("verification reports support table, csv and json");
}

} // namespace tokenlab::cli
