#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "lazyarith/integer.hpp"

namespace lazyarith {

class checkpoint_error : public arith_error {
 public:
  using arith_error::arith_error;
};

/// Level-independent resume state: named integer fields, every value held
/// in the decimal interchange encoding so any admitting level can read it.
///
/// Text form, one item per line:
///
///   lazyarith-checkpoint/1
///   <key> <decimal>
///   ...
///
/// Keys are nonempty and contain no whitespace. Lines are written in key order.
class Checkpoint {
 public:
  static constexpr std::string_view format_version = "lazyarith-checkpoint/1";

  template <PrecisionLevel L>
  void put(const std::string& key, const Int<L>& value) {
    put_decimal(key, to_decimal(value));
  }

  void put_count(const std::string& key, std::uint64_t value) {
    put_decimal(key, std::to_string(value));
  }

  void put_scalar(const std::string& key, std::int64_t value) {
    put_decimal(key, std::to_string(value));
  }

  /// Reads a field at level L. Throws range_error when L is too narrow.
  template <PrecisionLevel L>
  Int<L> get(std::string_view key) const {
    return from_decimal<L>(decimal(key));
  }

  std::uint64_t get_count(std::string_view key) const { return get_machine<std::uint64_t>(key); }
  std::int64_t get_scalar(std::string_view key) const { return get_machine<std::int64_t>(key); }

  bool contains(std::string_view key) const { return fields_.find(key) != fields_.end(); }
  std::size_t size() const noexcept { return fields_.size(); }

  const std::string& decimal(std::string_view key) const {
    const auto it = fields_.find(key);
    if (it == fields_.end()) throw checkpoint_error("checkpoint has no field '" + std::string(key) + "'");
    return it->second;
  }

  std::string encode() const {
    std::string out(format_version);
    out += '\n';
    for (const auto& [key, value] : fields_) {
      out += key;
      out += ' ';
      out += value;
      out += '\n';
    }
    return out;
  }

  static Checkpoint decode(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != format_version) {
      throw checkpoint_error("not a checkpoint: expected header '" + std::string(format_version) + "'");
    }
    Checkpoint cp;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto space = line.find(' ');
      if (space == std::string::npos || space == 0) {
        throw checkpoint_error("malformed checkpoint line: '" + line + "'");
      }
      const std::string key = line.substr(0, space);
      const std::string value = line.substr(space + 1);
      try {
        detail::split_decimal(value);
      } catch (const parse_error& e) {
        throw checkpoint_error("checkpoint field '" + key + "': " + e.what());
      }
      if (!cp.fields_.emplace(key, value).second) {
        throw checkpoint_error("duplicate checkpoint field '" + key + "'");
      }
    }
    return cp;
  }

  /// Writes a sibling temporary, then renames it over `path`.
  void save(const std::filesystem::path& path) const {
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw checkpoint_error("cannot write checkpoint '" + tmp.string() + "'");
      out << encode();
      if (!out.flush()) throw checkpoint_error("cannot write checkpoint '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
  }

  static Checkpoint load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw checkpoint_error("cannot read checkpoint '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return decode(text.str());
  }

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;

 private:
  void put_decimal(const std::string& key, std::string value) {
    if (key.empty() || key.find_first_of(" \t\r\n") != std::string::npos) {
      throw checkpoint_error("invalid checkpoint key '" + key + "'");
    }
    fields_.insert_or_assign(key, std::move(value));
  }

  template <class T>
  T get_machine(std::string_view key) const {
    const std::string& text = decimal(key);
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw checkpoint_error("checkpoint field '" + std::string(key) + "' is not a machine integer");
    }
    return value;
  }

  std::map<std::string, std::string, std::less<>> fields_;
};

}  // namespace lazyarith
