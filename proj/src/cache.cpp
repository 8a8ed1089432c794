#include "mbar/cache.hpp"

#include <fstream>
#include <system_error>

#include "mbar/errors.hpp"

namespace mbar {

namespace {

[[noreturn]] void corrupt(int line_no, const std::string& what) {
  throw CacheError("cache line " + std::to_string(line_no) + ": " + what);
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

TableMap parse_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) {
    throw CacheError("cache header is not \"" + std::string(kCacheHeader) + "\"");
  }
  TableMap tables;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto colon = line.find(": ");
    if (colon == std::string::npos) corrupt(line_no, "missing \": \" separator");
    const std::string n_text = line.substr(0, colon);
    if (!is_digits(n_text) || n_text.size() > 6) corrupt(line_no, "bad n \"" + n_text + "\"");
    const int n = std::stoi(n_text);

    BettiTable table;
    table.n = n;
    const std::string body = line.substr(colon + 2);
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      const std::string field = body.substr(start, comma == std::string::npos ? comma : comma - start);
      if (!is_digits(field)) corrupt(line_no, "bad coefficient \"" + field + "\"");
      table.ranks.emplace_back(field, 10);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    try {
      validate(table);
    } catch (const InvariantViolation& e) {
      corrupt(line_no, e.what());
    }
    if (!tables.empty() && tables.rbegin()->first >= n) {
      corrupt(line_no, "records not strictly increasing in n");
    }
    tables.emplace(n, std::move(table));
  }
  return tables;
}

std::string format_cache(const TableMap& tables) {
  std::string out(kCacheHeader);
  out += '\n';
  for (const auto& [n, table] : tables) {
    out += std::to_string(n) + ": ";
    for (std::size_t l = 0; l < table.ranks.size(); ++l) {
      if (l) out += ',';
      out += table.ranks[l].get_str();
    }
    out += '\n';
  }
  return out;
}

TableMap load_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    if (!std::filesystem::exists(path)) return {};
    throw CacheError("cannot read cache " + path.string());
  }
  return parse_cache(in);
}

void save_cache(const std::filesystem::path& path, const TableMap& tables) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << format_cache(tables);
    if (!out.flush()) throw CacheError("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CacheError("cannot replace " + path.string() + ": " + ec.message());
}

}  // namespace mbar
