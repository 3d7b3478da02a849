#include "multicomp/counting.hpp"

#include "multicomp/errors.hpp"

namespace multicomp {

namespace {

void require_positive(int value, const char* name) {
  if (value < 1) throw DomainError(std::string(name) + " must be >= 1, got " + std::to_string(value));
}

}  // namespace

std::vector<BigInt> multinomial_row(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("multinomial_row needs n, k >= 0");
  std::vector<BigInt> row{1};
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(row.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < row.size(); ++i)
      for (int j = 0; j <= k; ++j) next[i + static_cast<std::size_t>(j)] += row[i];
    row = std::move(next);
  }
  return row;
}

BigInt multinomial(int n, int l, int k) {
  if (n < 0 || l < 0 || l > n * k) return 0;
  return multinomial_row(n, k)[static_cast<std::size_t>(l)];
}

BigInt count_total(int k, int n) {
  require_positive(k, "k");
  require_positive(n, "n");
  return power(BigInt(k + 1), static_cast<unsigned>(n - 1));
}

BigInt count_all_parts(int k, int n, int l) {
  require_positive(k, "k");
  require_positive(n, "n");
  return multinomial(n - 1, l - 1, k);
}

BigInt count_positive_parts(int k, int n, int l) {
  require_positive(k, "k");
  require_positive(n, "n");
  if (l < 1 || l > n) return 0;
  return power(BigInt(k), static_cast<unsigned>(l - 1)) * binomial(n - 1, l - 1);
}

BigInt count_zeros(int k, int n, int l) {
  require_positive(k, "k");
  require_positive(n, "n");
  if (l < 0) return 0;
  BigInt total = 0;
  for (int m = 0; m <= n - 1; ++m) total += binomial(n - 1, m) * multinomial(m, l, k - 1);
  return total;
}

std::string_view statistic_name(Statistic s) {
  switch (s) {
    case Statistic::all_parts:
      return "all_parts";
    case Statistic::positive_parts:
      return "positive_parts";
    case Statistic::zeros:
      return "zeros";
  }
  return "?";
}

Statistic statistic_from_name(std::string_view name) {
  if (name == "all" || name == "all_parts") return Statistic::all_parts;
  if (name == "positive" || name == "positive_parts") return Statistic::positive_parts;
  if (name == "zeros") return Statistic::zeros;
  throw DomainError("unknown statistic '" + std::string(name) + "'");
}

int row_length(int k, Statistic statistic, int n) {
  switch (statistic) {
    case Statistic::all_parts:
      return n * k - k + 1;
    case Statistic::positive_parts:
      return n;
    case Statistic::zeros:
      return (n - 1) * (k - 1) + 1;
  }
  throw DomainError("unknown statistic");
}

BigInt Triangle::at(int n, int l) const {
  if (n < 1 || static_cast<std::size_t>(n) > rows.size()) return 0;
  const auto& row = rows[static_cast<std::size_t>(n - 1)];
  const int i = l - first_index();
  if (i < 0 || static_cast<std::size_t>(i) >= row.size()) return 0;
  return row[static_cast<std::size_t>(i)];
}

Triangle triangle(int k, Statistic statistic, int rows) {
  require_positive(k, "k");
  require_positive(rows, "rows");
  Triangle t;
  t.k = k;
  t.statistic = statistic;
  t.rows.push_back({1});
  const int first = t.first_index();
  for (int n = 2; n <= rows; ++n) {
    std::vector<BigInt> row(static_cast<std::size_t>(row_length(k, statistic, n)));
    for (std::size_t i = 0; i < row.size(); ++i) {
      const int l = static_cast<int>(i) + first;
      BigInt& entry = row[i];
      switch (statistic) {
        case Statistic::all_parts:
          // append j-1 zeros and a 1 (j = 1..k), or grow the last part
          for (int j = 0; j <= k; ++j) entry += t.at(n - 1, l - j);
          break;
        case Statistic::positive_parts:
          entry = k * t.at(n - 1, l - 1) + t.at(n - 1, l);
          break;
        case Statistic::zeros:
          for (int j = 1; j <= k - 1; ++j) entry += t.at(n - 1, l - j);
          entry += 2 * t.at(n - 1, l);
          break;
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string triangle_text(const Triangle& t) {
  std::string out;
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string triangle_csv(const Triangle& t) {
  std::string out = "n";
  const int width = t.rows.empty() ? 0 : static_cast<int>(t.rows.back().size());
  for (int i = 0; i < width; ++i) out += ",l=" + std::to_string(i + t.first_index());
  out += '\n';
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    out += std::to_string(n + 1);
    for (const BigInt& v : t.rows[n]) out += "," + to_string(v);
    out += '\n';
  }
  return out;
}

std::string triangle_json(const Triangle& t) {
  std::string out = "{\"k\":" + std::to_string(t.k) + ",\"statistic\":\"" +
                    std::string(statistic_name(t.statistic)) + "\",\"rows\":[";
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    if (n) out += ',';
    out += '[';
    for (std::size_t i = 0; i < t.rows[n].size(); ++i) {
      if (i) out += ',';
      out += to_string(t.rows[n][i]);
    }
    out += ']';
  }
  out += "]}";
  return out;
}

}  // namespace multicomp
