#include "laguerre/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <system_error>

#include "laguerre/error.hpp"

namespace laguerre::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(',', start);
    fields.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

long long parse_integer(std::string_view text, std::size_t line_no) {
  long long v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     std::string(text) + "'");
  }
  return v;
}

bool looks_numeric(std::string_view field) {
  double v = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v);
  return ec == std::errc() && ptr == end;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("to_chars failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError("expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

void write_coefficients(std::ostream& out, const CoefficientField& field) {
  out << "dim " << field.dim() << '\n';
  out << "truncation_kind " << to_string(field.truncation().kind) << '\n';
  out << "truncation_degree " << field.truncation().degree << '\n';
  for (const auto& e : field.entries()) {
    for (std::uint32_t v : e.index.entries()) out << v << ',';
    out << format_double(e.value) << '\n';
  }
}

CoefficientField read_coefficients(std::istream& in) {
  std::optional<std::size_t> dim;
  std::optional<TruncationKind> kind;
  std::optional<std::uint32_t> degree;
  std::vector<CoefficientField::Entry> entries;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.find(',') == std::string_view::npos) {
      const auto space = line.find_first_of(" \t");
      if (space == std::string_view::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed header '" +
                         std::string(line) + "'");
      }
      const std::string_view key = line.substr(0, space);
      const std::string_view value = trim(line.substr(space));
      if (!entries.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": header after records");
      }
      if (key == "dim") {
        const long long d = parse_integer(value, line_no);
        if (d <= 0) throw ParseError("dim must be positive");
        dim = static_cast<std::size_t>(d);
      } else if (key == "truncation_kind") {
        kind = parse_truncation_kind(std::string(value));
      } else if (key == "truncation_degree") {
        const long long m = parse_integer(value, line_no);
        if (m < 0) throw ParseError("truncation_degree must be >= 0");
        degree = static_cast<std::uint32_t>(m);
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown header field '" +
                         std::string(key) + "'");
      }
      continue;
    }
    if (!dim || !kind || !degree) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": record before dim/truncation_kind/truncation_degree header");
    }
    const auto fields = split_commas(line);
    if (fields.size() != *dim + 1) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(*dim + 1) + " fields, got " + std::to_string(fields.size()));
    }
    std::vector<long long> idx(*dim);
    for (std::size_t i = 0; i < *dim; ++i) idx[i] = parse_integer(fields[i], line_no);
    double value = 0.0;
    try {
      value = parse_double(fields.back());
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      entries.push_back({MultiIndex::from_signed(idx), value});
    } catch (const DomainError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!dim || !kind || !degree) {
    throw ParseError("coefficient file is missing dim/truncation_kind/truncation_degree");
  }
  try {
    return CoefficientField::from_entries(*dim, Truncation{*kind, *degree}, std::move(entries));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

void save_coefficients(const std::filesystem::path& path, const CoefficientField& field) {
  std::ostringstream buffer;
  write_coefficients(buffer, field);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << buffer.str();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

CoefficientField load_coefficients(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open coefficient file '" + path.string() + "'");
  return read_coefficients(in);
}

void write_rule_csv(std::ostream& out, const QuadratureRule& rule) {
  out << "node,weight,log_modified_weight\n";
  for (std::size_t k = 0; k < rule.size(); ++k) {
    out << format_double(rule.nodes[k]) << ',' << format_double(rule.weights[k]) << ','
        << format_double(rule.log_modified_weights[k]) << '\n';
  }
}

std::vector<std::vector<double>> read_points_csv(std::istream& in, std::size_t dim) {
  std::vector<std::vector<double>> points;
  std::string raw;
  std::size_t line_no = 0;
  bool first_data = true;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_commas(line);
    if (first_data && !looks_numeric(fields.front())) {
      first_data = false;
      continue;
    }
    first_data = false;
    if (dim == 0) dim = fields.size();
    if (fields.size() != dim) {
      throw ParseError("points line " + std::to_string(line_no) + ": expected " +
                       std::to_string(dim) + " columns, got " + std::to_string(fields.size()));
    }
    std::vector<double> p(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      try {
        p[i] = parse_double(fields[i]);
      } catch (const ParseError& e) {
        throw ParseError("points line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    points.push_back(std::move(p));
  }
  return points;
}

void write_values_csv(std::ostream& out, const std::vector<std::vector<double>>& points,
                      const std::vector<double>& values) {
  const std::size_t dim = points.empty() ? 0 : points.front().size();
  for (std::size_t i = 0; i < dim; ++i) out << 'x' << (i + 1) << ',';
  out << "value\n";
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (double c : points[r]) out << format_double(c) << ',';
    out << format_double(values.at(r)) << '\n';
  }
}

}  // namespace laguerre::io
