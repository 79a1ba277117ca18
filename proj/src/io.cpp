#include "bcell/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace bcell {

std::string cache_file_name(int n, const OrderSpec& spec) {
  std::string order = "asymptotic";
  if (spec.kind() == OrderKind::weighted) order = "weighted-" + std::to_string(spec.c()) + "-" + std::to_string(spec.d());
  return "kl-n" + std::to_string(n) + "-" + order + ".txt";
}

namespace {

std::string header_order(const OrderSpec& spec) {
  if (spec.kind() == OrderKind::asymptotic) return "order asymptotic";
  return "order weighted " + std::to_string(spec.c()) + " " + std::to_string(spec.d());
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto bar = line.find('|', pos);
    out.push_back(line.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return out;
}

}  // namespace

void write_store(std::ostream& out, const KLStore& store) {
  const Group& g = store.group();
  out << "bcell-kl-cache " << kCacheFormatVersion << "\n";
  out << "rank " << g.rank() << "\n";
  out << header_order(store.spec()) << "\n";
  out << "pstar " << store.pstar_count() << "\n";
  for (Index w = 0; w < g.size(); ++w) {
    const auto& col = store.pstar_column(w);
    for (std::size_t k = 0; k < col.size(); ++k) {
      out << format_window(g.element(col.rows[k])) << " | " << format_window(g.element(w)) << " | "
          << col.values[k].format() << "\n";
    }
  }
  out << "m " << store.m_count() << "\n";
  for (Generator s : generators(g.rank())) {
    for (Index w = 0; w < g.size(); ++w) {
      const auto& col = store.m_column(s, w);
      for (std::size_t k = 0; k < col.size(); ++k) {
        out << s.name() << " | " << format_window(g.element(col.rows[k])) << " | " << format_window(g.element(w))
            << " | " << col.values[k].format() << "\n";
      }
    }
  }
  out << "end\n";
}

void save_store(const KLStore& store, const std::filesystem::path& file) {
  std::filesystem::create_directories(file.parent_path());
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp);
    write_store(out, store);
  }
  std::filesystem::rename(tmp, file);
}

std::optional<KLStore> read_store(std::istream& in, std::shared_ptr<const Group> group, const OrderSpec& spec,
                                  std::string& reason) {
  const Group& g = *group;
  std::string line;
  auto expect = [&](const std::string& wanted) {
    if (!std::getline(in, line) || line != wanted) {
      reason = "header line '" + line + "' where '" + wanted + "' was expected";
      return false;
    }
    return true;
  };
  if (!expect("bcell-kl-cache " + std::to_string(kCacheFormatVersion))) return std::nullopt;
  if (!expect("rank " + std::to_string(g.rank()))) return std::nullopt;
  if (!expect(header_order(spec))) return std::nullopt;

  KLStore store(std::move(group), spec);
  const Rank rank(g.rank());
  auto count_line = [&](const std::string& tag, std::size_t& count) {
    if (!std::getline(in, line) || line.rfind(tag + " ", 0) != 0) {
      reason = "missing '" + tag + "' section";
      return false;
    }
    count = std::stoul(line.substr(tag.size() + 1));
    return true;
  };
  try {
    std::size_t count = 0;
    if (!count_line("pstar", count)) return std::nullopt;
    std::vector<SparseColumn> pcols(g.size());
    for (std::size_t i = 0; i < count; ++i) {
      if (!std::getline(in, line)) throw ValidationError("truncated P* section");
      const auto f = split_fields(line);
      if (f.size() != 3) throw ValidationError("malformed P* record '" + line + "'");
      const Index y = g.index_of(parse_window(rank, f[0]));
      const Index w = g.index_of(parse_window(rank, f[1]));
      if (!pcols[w].rows.empty() && pcols[w].rows.back() >= y) throw ValidationError("P* records out of order");
      pcols[w].rows.push_back(y);
      pcols[w].values.push_back(Laurent::parse(f[2], spec.dim()));
    }
    if (!count_line("m", count)) return std::nullopt;
    std::vector<std::vector<SparseColumn>> mcols(g.generator_count(), std::vector<SparseColumn>(g.size()));
    for (std::size_t i = 0; i < count; ++i) {
      if (!std::getline(in, line)) throw ValidationError("truncated M section");
      const auto f = split_fields(line);
      if (f.size() != 4) throw ValidationError("malformed M record '" + line + "'");
      const auto word = parse_word(g.rank(), f[0]);
      if (word.size() != 1) throw ValidationError("malformed generator in '" + line + "'");
      const Index y = g.index_of(parse_window(rank, f[1]));
      const Index w = g.index_of(parse_window(rank, f[2]));
      auto& col = mcols[word[0].index()][w];
      if (!col.rows.empty() && col.rows.back() >= y) throw ValidationError("M records out of order");
      col.rows.push_back(y);
      col.values.push_back(Laurent::parse(f[3], spec.dim()));
    }
    if (!expect("end")) return std::nullopt;
    for (Index w = 0; w < g.size(); ++w) store.set_pstar_column(w, std::move(pcols[w]));
    for (Generator s : generators(g.rank())) {
      for (Index w = 0; w < g.size(); ++w) store.set_m_column(s, w, std::move(mcols[s.index()][w]));
    }
  } catch (const std::exception& e) {
    reason = e.what();
    return std::nullopt;
  }
  return store;
}

KLStore load_or_build(std::shared_ptr<const Group> group, const OrderSpec& spec,
                      const std::optional<std::filesystem::path>& cache_dir, BuildMode mode, std::ostream& warn) {
  if (!cache_dir) return KLStore::build(std::move(group), spec, mode);
  const auto file = *cache_dir / cache_file_name(group->rank(), spec);
  if (std::filesystem::exists(file)) {
    std::ifstream in(file);
    std::string reason;
    if (auto store = read_store(in, group, spec, reason)) return std::move(*store);
    warn << "warning: ignoring cache " << file.string() << " (" << reason << "); recomputing\n";
  }
  KLStore store = KLStore::build(std::move(group), spec, mode);
  try {
    save_store(store, file);
  } catch (const std::exception& e) {
    warn << "warning: could not write cache " << file.string() << " (" << e.what() << ")\n";
  }
  return store;
}

nlohmann::json shape_to_json(const Bipartition& bp) { return nlohmann::json::array({bp.lambda, bp.mu}); }

nlohmann::json cells_to_json(const KLStore& store, const CellPartition& cells) {
  const Group& g = store.group();
  nlohmann::json out;
  out["format"] = kCellsFormat;
  out["n"] = g.rank();
  out["order"] = store.spec().to_json();
  auto list = nlohmann::json::array();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    nlohmann::json cell;
    if (store.spec().kind() == OrderKind::asymptotic) {
      cell["shape"] = shape_to_json(rs_insert(g.element(cells.cells[c].front())).b.shape());
    }
    auto elements = nlohmann::json::array();
    for (Index x : cells.cells[c]) elements.push_back(format_window(g.element(x)));
    cell["elements"] = std::move(elements);
    auto below = nlohmann::json::array();
    for (std::size_t d = 0; d < cells.size(); ++d) {
      if (d != c && cells.leq(static_cast<int>(d), static_cast<int>(c))) below.push_back(d);
    }
    cell["below"] = std::move(below);
    list.push_back(std::move(cell));
  }
  out["cells"] = std::move(list);
  return out;
}

nlohmann::json characters_to_json(const Group& g, const std::vector<ConjugacyClass>& classes,
                                  const std::vector<CellIdentification>& ids,
                                  const std::vector<std::vector<Index>>& members) {
  nlohmann::json out;
  out["format"] = kCharactersFormat;
  out["n"] = g.rank();
  auto cls = nlohmann::json::array();
  for (const auto& c : classes) {
    cls.push_back({{"label", shape_to_json(c.label)},
                   {"size", c.size},
                   {"representative", format_window(g.element(c.representative))}});
  }
  out["classes"] = std::move(cls);
  auto cells = nlohmann::json::array();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& id = ids[i];
    auto elements = nlohmann::json::array();
    for (Index x : members[i]) elements.push_back(format_window(g.element(x)));
    auto matches = nlohmann::json::array();
    for (const auto& m : id.matches) matches.push_back(shape_to_json(m));
    cells.push_back({{"cell_shape", shape_to_json(id.shape)},
                     {"dimension", id.dimension},
                     {"character_label", shape_to_json(id.expected)},
                     {"matches", std::move(matches)},
                     {"identified", id.ok()},
                     {"values", id.values},
                     {"elements", std::move(elements)}});
  }
  out["cells"] = std::move(cells);
  return out;
}

}  // namespace bcell
