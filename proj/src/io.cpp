#include "rankfuse/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "rankfuse/errors.hpp"

namespace rankfuse::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Calls fn(line_number, content) for every non-blank, non-comment line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    fn(line_no, line);
  }
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto pos = line.find(delimiter);
    fields.push_back(trim(line.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    line = line.substr(pos + 1);
  }
  return fields;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
  return value;
}

}  // namespace

std::vector<Ranking> parse_rankings(std::string_view text) {
  std::vector<Ranking> out;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    std::vector<ObjectId> order;
    for (auto field : split(line, ',')) {
      const auto id = parse_number<ObjectId>(field);
      if (!id) parse_error(line_no, "'" + std::string(field) + "' is not an object id");
      order.push_back(*id);
    }
    try {
      out.emplace_back(std::move(order));
    } catch (const Error& e) {
      fail(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  });
  if (out.empty()) fail(ErrorCode::EmptyInput, "no rankings found");
  return out;
}

std::vector<double> parse_weights(std::string_view text) {
  std::vector<double> out;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto w = parse_number<double>(line);
    if (!w || !std::isfinite(*w) || *w < 0.0) {
      parse_error(line_no, "'" + std::string(line) + "' is not a non-negative weight");
    }
    out.push_back(*w);
  });
  return out;
}

RankingList parse_rankings_file(const std::filesystem::path& rankings,
                                const std::optional<std::filesystem::path>& weights) {
  auto parsed = parse_rankings(read_text(rankings));
  std::vector<double> w(parsed.size(), 1.0);
  if (weights) {
    w = parse_weights(read_text(*weights));
    if (w.size() != parsed.size()) {
      fail(ErrorCode::LengthMismatch, std::to_string(w.size()) + " weights for " +
                                          std::to_string(parsed.size()) + " rankings");
    }
  }
  std::vector<WeightedRanking> items;
  for (std::size_t i = 0; i < parsed.size(); ++i) items.push_back({std::move(parsed[i]), w[i]});
  return RankingList(std::move(items));
}

std::string format_rankings(const RankingList& list) {
  std::string out;
  for (const auto& item : list) {
    const auto& order = item.ranking.order();
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(order[i]);
    }
    out += '\n';
  }
  return out;
}

std::string format_weights(const RankingList& list) {
  std::string out;
  for (const auto& item : list) out += format_double(item.weight) + '\n';
  return out;
}

IdTable::IdTable(const std::vector<std::string>& tokens, bool require_positive) {
  std::set<std::string> unique(tokens.begin(), tokens.end());
  for (const auto& t : unique) {
    const auto v = parse_number<std::int64_t>(t);
    if (!v || (require_positive && *v <= 0)) {
      numeric_ = false;
      break;
    }
  }
  std::int64_t next = 1;
  for (const auto& t : unique) {
    const std::int64_t id = numeric_ ? *parse_number<std::int64_t>(t) : next++;
    if (!names_.emplace(id, t).second) {
      // "7" and "07" collide numerically; fall back to interning.
      *this = IdTable();
      numeric_ = false;
      next = 1;
      for (const auto& u : unique) {
        ids_.emplace(u, next);
        names_.emplace(next, u);
        ++next;
      }
      return;
    }
    ids_.emplace(t, id);
  }
}

std::optional<std::int64_t> IdTable::find(const std::string& token) const {
  auto it = ids_.find(token);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::string IdTable::name(std::int64_t id) const {
  auto it = names_.find(id);
  return it == names_.end() ? std::to_string(id) : it->second;
}

namespace {

struct Row {
  std::size_t line_no;
  std::vector<std::string> fields;
};

std::vector<Row> parse_table(std::string_view text, char delimiter,
                             const std::vector<std::string_view>& header) {
  std::vector<Row> rows;
  bool seen_header = false;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split(line, delimiter);
    if (!seen_header) {
      if (fields != header) {
        std::string expected;
        for (auto h : header) expected += (expected.empty() ? "" : std::string(1, delimiter)) + std::string(h);
        parse_error(line_no, "expected header '" + expected + "'");
      }
      seen_header = true;
      return;
    }
    if (fields.size() != header.size()) {
      parse_error(line_no, "expected " + std::to_string(header.size()) + " fields, found " +
                               std::to_string(fields.size()));
    }
    Row row{line_no, {}};
    for (auto f : fields) {
      if (f.empty()) parse_error(line_no, "empty field");
      row.fields.emplace_back(f);
    }
    rows.push_back(std::move(row));
  });
  if (!seen_header) fail(ErrorCode::EmptyInput, "file has no header");
  return rows;
}

CategoryId parse_label(const Row& row, const std::string& field) {
  const auto v = parse_number<CategoryId>(field);
  if (!v || *v < 0) parse_error(row.line_no, "'" + field + "' is not a label");
  return *v;
}

}  // namespace

LabelData parse_labels(std::string_view text, char delimiter) {
  const auto rows = parse_table(text, delimiter, {"worker", "item", "label"});
  if (rows.empty()) fail(ErrorCode::EmptyInput, "label file has no records");
  std::vector<std::string> workers, items;
  for (const auto& r : rows) {
    workers.push_back(r.fields[0]);
    items.push_back(r.fields[1]);
  }
  IdTable worker_ids(workers, true);
  IdTable item_ids(items, false);

  std::vector<LabelRecord> records;
  std::map<std::pair<WorkerId, ItemId>, std::size_t> seen;
  for (const auto& r : rows) {
    const LabelRecord rec{*worker_ids.find(r.fields[0]), *item_ids.find(r.fields[1]),
                          parse_label(r, r.fields[2])};
    auto [it, fresh] = seen.emplace(std::pair{rec.worker, rec.item}, r.line_no);
    if (!fresh) {
      fail(ErrorCode::DuplicateLabel, "line " + std::to_string(r.line_no) + ": worker '" +
                                          r.fields[0] + "' already labeled item '" + r.fields[1] +
                                          "' on line " + std::to_string(it->second));
    }
    records.push_back(rec);
  }
  return {LabelMatrix(std::move(records)), std::move(worker_ids), std::move(item_ids)};
}

GoldLabels parse_gold(std::string_view text, char delimiter, const IdTable& items) {
  const auto rows = parse_table(text, delimiter, {"item", "label"});
  GoldLabels gold;
  for (const auto& r : rows) {
    const auto item = items.find(r.fields[0]);
    if (!item) {
      fail(ErrorCode::UnknownItem, "line " + std::to_string(r.line_no) + ": item '" +
                                       r.fields[0] + "' has no crowd labels");
    }
    if (!gold.emplace(*item, parse_label(r, r.fields[1])).second) {
      parse_error(r.line_no, "item '" + r.fields[0] + "' has two gold labels");
    }
  }
  if (gold.empty()) fail(ErrorCode::EmptyInput, "gold file has no records");
  return gold;
}

char delimiter_for(const std::filesystem::path& path) {
  return path.extension() == ".tsv" ? '\t' : ',';
}

LabelData read_label_file(const std::filesystem::path& path) {
  return parse_labels(read_text(path), delimiter_for(path));
}

GoldLabels read_gold_file(const std::filesystem::path& path, const IdTable& items) {
  return parse_gold(read_text(path), delimiter_for(path), items);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << text;
  if (!out) fail(ErrorCode::IoError, "write to '" + path.string() + "' failed");
}

std::string format_sweep_curves(const SweepResult& result, std::string_view config_line) {
  std::string out = "# " + std::string(config_line) + "\nalgorithm,sigma,mean_similarity\n";
  for (const auto& curve : result.curves) {
    for (const auto& [sigma, sim] : curve.points) {
      out += std::string(to_string(curve.algorithm)) + ',' + format_double(sigma) + ',' +
             format_double(sim) + '\n';
    }
  }
  return out;
}

std::string format_sweep_auc(const SweepResult& result, std::string_view config_line) {
  std::string out = "# " + std::string(config_line) + "\nalgorithm,auc\n";
  for (const auto& curve : result.curves) {
    out += std::string(to_string(curve.algorithm)) + ',' + format_double(curve.auc) + '\n';
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace rankfuse::io
