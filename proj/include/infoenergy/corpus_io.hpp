#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "infoenergy/text.hpp"
#include "infoenergy/tokenize.hpp"

namespace infoenergy {

enum class CorpusRole { background, experiment, both };

inline std::optional<CorpusRole> parse_corpus_role(std::string_view s) {
  if (s == "background") return CorpusRole::background;
  if (s == "experiment") return CorpusRole::experiment;
  if (s == "both") return CorpusRole::both;
  return std::nullopt;
}

// One record per text. Relative paths resolve against the manifest's
// directory.
struct ManifestEntry {
  std::string path;
  std::string title;
  std::string author;
  int date_year = 0;
  CorpusRole role = CorpusRole::both;
};

namespace detail {

// One CSV record; handles quoted fields with embedded commas and "" escapes.
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// One word per line, lower-case; blank lines and '#' comments skipped.
inline std::set<std::string> read_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open word list: " + path.string());
  }
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string w = detail::trim(line);
    if (w.empty() || w[0] == '#') continue;
    words.insert(w);
  }
  return words;
}

// Header row: path,title,author,date_year,role
inline std::vector<ManifestEntry> read_manifest(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open manifest: " + path.string());
  }
  std::vector<ManifestEntry> entries;
  std::string line;
  bool saw_header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = detail::trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    if (!saw_header) {
      saw_header = true;  // first data line is the header
      continue;
    }
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != 5) {
      throw std::runtime_error("manifest " + path.string() + ":" +
                               std::to_string(line_no) +
                               ": expected 5 fields, got " +
                               std::to_string(fields.size()));
    }
    ManifestEntry e;
    e.path = detail::trim(fields[0]);
    e.title = detail::trim(fields[1]);
    e.author = detail::trim(fields[2]);
    try {
      e.date_year = std::stoi(detail::trim(fields[3]));
    } catch (const std::exception&) {
      throw std::runtime_error("manifest " + path.string() + ":" +
                               std::to_string(line_no) + ": bad date_year");
    }
    if (e.date_year < 1 || e.date_year > 9999) {
      throw std::runtime_error("manifest " + path.string() + ":" +
                               std::to_string(line_no) +
                               ": date_year out of range");
    }
    const auto role = parse_corpus_role(detail::trim(fields[4]));
    if (!role) {
      throw std::runtime_error("manifest " + path.string() + ":" +
                               std::to_string(line_no) + ": bad role '" +
                               fields[4] + "'");
    }
    e.role = *role;
    entries.push_back(std::move(e));
  }
  if (entries.empty()) {
    throw std::runtime_error("manifest " + path.string() + ": no entries");
  }
  return entries;
}

struct LoadedText {
  Document document;
  CorpusRole role = CorpusRole::both;
};

inline std::vector<LoadedText> load_corpus(
    const std::filesystem::path& manifest_path,
    const TokenizerOptions& opts = {}) {
  const auto entries = read_manifest(manifest_path);
  const auto base = manifest_path.parent_path();
  std::vector<LoadedText> texts;
  texts.reserve(entries.size());
  for (const ManifestEntry& e : entries) {
    std::filesystem::path p(e.path);
    if (p.is_relative()) p = base / p;
    LoadedText t;
    t.document = tokenize(read_text_file(p), opts);
    t.document.meta.id = p.stem().string();
    t.document.meta.title = e.title;
    t.document.meta.author = e.author;
    t.document.meta.date_year = e.date_year;
    t.role = e.role;
    texts.push_back(std::move(t));
  }
  return texts;
}

inline std::vector<const Document*> select_documents(
    const std::vector<LoadedText>& texts, CorpusRole wanted) {
  std::vector<const Document*> out;
  for (const LoadedText& t : texts) {
    if (t.role == wanted || t.role == CorpusRole::both ||
        wanted == CorpusRole::both) {
      out.push_back(&t.document);
    }
  }
  return out;
}

}  // namespace infoenergy
