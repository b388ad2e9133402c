#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "icgr/cgr.hpp"
#include "icgr/codec.hpp"
#include "icgr/errors.hpp"
#include "icgr/fasta.hpp"
#include "icgr/parallel.hpp"

namespace icgr::cli {
namespace {

namespace fs = std::filesystem;

enum class Format { Text, Binary };

struct Config {
  std::vector<std::string> inputs;
  std::string output;
  std::uint32_t block_size = kDefaultBlockSize;
  Format format = Format::Binary;
  int k = 7;
  bool log_scale = false;
  unsigned threads = 1;
  bool machine_readable = false;
};

// I/O problems and usage mistakes found after parsing.
class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw CliError("cannot open '" + path + "'");
  std::string bytes(std::istreambuf_iterator<char>(file), {});
  if (file.bad()) throw CliError("cannot read '" + path + "'");
  return bytes;
}

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path == "-") {
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw CliError("cannot open '" + path + "' for writing");
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  file.close();
  if (!file) throw CliError("cannot write '" + path + "'");
}

enum class InputKind { Binary, Text, Fasta, Unknown };

InputKind classify(std::string_view bytes) {
  if (has_binary_magic(bytes)) return InputKind::Binary;
  std::size_t start = bytes.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos || bytes[start] != '>') return InputKind::Unknown;
  std::size_t end = bytes.find('\n', start);
  std::string header(bytes.substr(start, end == std::string_view::npos ? end : end - start));
  static const std::regex text_header(R"(^>.*\bblock_size=\d+ blocks=\d+\s*$)");
  return std::regex_match(header, text_header) ? InputKind::Text : InputKind::Fasta;
}

std::vector<EncodedRecord> read_encoded(std::string_view bytes, InputKind kind) {
  if (kind == InputKind::Binary) return read_binary(bytes);
  return read_text(bytes);
}

// Encoded containers are read as stored; FASTA is encoded with the configured
// block size.
std::vector<EncodedRecord> load_any(const std::string& path, const Config& cfg,
                                    std::istream& in) {
  const std::string bytes = read_input(path, in);
  switch (classify(bytes)) {
    case InputKind::Binary:
      return read_binary(bytes);
    case InputKind::Text:
      return read_text(bytes);
    case InputKind::Fasta: {
      const auto records = parse_fasta(bytes);
      return encode_records(records, cfg.block_size, cfg.threads);
    }
    case InputKind::Unknown:
      break;
  }
  if (bytes.find_first_not_of(" \t\r\n") == std::string::npos) throw EmptyInput();
  throw CliError("'" + path + "' is neither FASTA nor an ICGR file");
}

std::vector<SequenceRecord> load_fasta(const std::string& path, std::istream& in) {
  auto records = parse_fasta(read_input(path, in));
  if (records.empty()) throw EmptyInput();
  return records;
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

int cmd_encode(const Config& cfg, Streams io) {
  const std::string& input = cfg.inputs.front();
  const auto records = load_fasta(input, io.in);
  const auto encoded = encode_records(records, cfg.block_size, cfg.threads);

  std::string output = cfg.output;
  if (output.empty()) {
    output = input == "-" ? "-" : input + (cfg.format == Format::Binary ? ".icgr" : ".icgr.txt");
  }
  write_output(output, cfg.format == Format::Binary ? write_binary(encoded) : write_text(encoded),
               io.out);

  for (const EncodedRecord& r : encoded) {
    const CompressionStats s = stats(r);
    io.err << r.name << ": " << s.n_total << " nt, " << s.blocks << " block(s), "
           << fixed(s.bits_per_nt_text()) << " bits/nt text, " << fixed(s.bits_per_nt_binary())
           << " bits/nt binary payload\n";
  }
  return kSuccess;
}

int cmd_decode(const Config& cfg, Streams io) {
  const std::string& input = cfg.inputs.front();
  const std::string bytes = read_input(input, io.in);
  const InputKind kind = classify(bytes);
  if (kind == InputKind::Fasta) throw CliError("'" + input + "' is FASTA, not an ICGR file");
  if (kind == InputKind::Unknown) {
    if (bytes.find_first_not_of(" \t\r\n") == std::string::npos) throw EmptyInput();
    throw CliError("'" + input + "' is not an ICGR file");
  }
  const auto decoded = decode_records(read_encoded(bytes, kind), cfg.threads);
  write_output(cfg.output.empty() ? "-" : cfg.output, write_fasta(decoded), io.out);
  return kSuccess;
}

int cmd_roundtrip(const Config& cfg, Streams io) {
  const auto records = load_fasta(cfg.inputs.front(), io.in);
  const auto encoded = encode_records(records, cfg.block_size, cfg.threads);
  const auto decoded = decode_records(encoded, cfg.threads);

  std::ostringstream report;
  bool all_pass = true;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const bool pass = decoded[i].sequence == records[i].sequence;
    all_pass = all_pass && pass;
    const EncodedRecord& e = encoded[i];
    report << (pass ? "PASS " : "FAIL ") << records[i].name << " n=" << e.length();
    if (e.blocks.size() == 1) {
      const TriInteger& t = e.blocks.front();
      report << " (" << t.n << ", " << t.x.get_str() << ", " << t.y.get_str() << ")";
    } else {
      report << " blocks=" << e.blocks.size();
    }
    report << '\n';
  }
  write_output(cfg.output.empty() ? "-" : cfg.output, report.str(), io.out);
  return all_pass ? kSuccess : kFailure;
}

std::string sanitize(const std::string& name) {
  std::string id = name.substr(0, name.find_first_of(" \t"));
  for (char& c : id) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '.' && c != '_' && c != '-') c = '_';
  }
  if (id.empty() || id == "." || id == "..") id = "record";
  return id;
}

int cmd_plot(const Config& cfg, Streams io) {
  const auto records = load_fasta(cfg.inputs.front(), io.in);
  const fs::path dir = cfg.output.empty() ? fs::path(".") : fs::path(cfg.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CliError("cannot create directory '" + dir.string() + "': " + ec.message());

  std::set<std::string> used;
  for (const SequenceRecord& r : records) {
    if (r.sequence.empty()) throw CliError("record '" + r.name + "' is empty; nothing to plot");
    std::string stem = sanitize(r.name);
    for (int suffix = 2; used.count(stem); ++suffix) {
      stem = sanitize(r.name) + "_" + std::to_string(suffix);
    }
    used.insert(stem);

    const FcgrGrid grid = fcgr(r.sequence, cfg.k);
    const fs::path path = dir / (stem + ".cgr.pgm");
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw CliError("cannot open '" + path.string() + "' for writing");
    write_pgm(file, grid, cfg.log_scale);
    file.close();
    if (!file) throw CliError("cannot write '" + path.string() + "'");
    io.err << path.string() << ": " << grid.side() << "x" << grid.side() << ", "
           << grid.total() << " points\n";
  }
  return kSuccess;
}

int cmd_diff(const Config& cfg, Streams io) {
  if (cfg.inputs.size() != 2) throw CliError("diff needs exactly two inputs");
  if (cfg.inputs[0] == "-" && cfg.inputs[1] == "-") {
    throw CliError("at most one diff input can be standard input");
  }
  const auto a = load_any(cfg.inputs[0], cfg, io.in);
  const auto b = load_any(cfg.inputs[1], cfg, io.in);
  if (a.size() != b.size()) {
    throw CliError("record count mismatch: " + std::to_string(a.size()) + " vs " +
                   std::to_string(b.size()));
  }

  std::vector<std::vector<MutationEvent>> events(a.size());
  parallel_for(a.size(), cfg.threads, [&](std::size_t i) {
    try {
      events[i] = diff_records(a[i], b[i]);
    } catch (const LengthMismatch& e) {
      throw CliError("record '" + a[i].name + "': " + e.what());
    }
  });

  std::ostringstream report;
  bool any = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const MutationEvent& e : events[i]) {
      any = true;
      report << a[i].name << ' ' << e.position << ' ' << to_char(e.from) << '>' << to_char(e.to)
             << '\n';
    }
  }
  write_output(cfg.output.empty() ? "-" : cfg.output, report.str(), io.out);
  return any ? kDifferences : kSuccess;
}

struct StatsRow {
  std::string name;
  CompressionStats s;
};

std::string stats_table(const std::vector<StatsRow>& rows) {
  const std::vector<std::string> head{"record", "n",       "blocks",   "bits_text",
                                      "bits/nt", "bits_bin", "bits/nt", "file bits/nt"};
  std::vector<std::vector<std::string>> cells;
  for (const StatsRow& r : rows) {
    cells.push_back({r.name, std::to_string(r.s.n_total), std::to_string(r.s.blocks),
                     std::to_string(r.s.bits_text), fixed(r.s.bits_per_nt_text()),
                     std::to_string(r.s.bits_binary), fixed(r.s.bits_per_nt_binary()),
                     fixed(r.s.bits_per_nt_container())});
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      } else {
        os << "  " << std::right << std::setw(static_cast<int>(width[c])) << row[c];
      }
    }
    os << '\n';
  };
  line(head);
  for (const auto& row : cells) line(row);
  return os.str();
}

// Shortest decimal that reads back to the same double.
std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string stats_lines(const std::vector<StatsRow>& rows) {
  std::ostringstream os;
  for (const StatsRow& r : rows) {
    os << "record=" << r.name << "\tn=" << r.s.n_total << "\tblocks=" << r.s.blocks
       << "\tbits_text=" << r.s.bits_text << "\tbits_binary=" << r.s.bits_binary
       << "\tbits_container=" << r.s.bits_container
       << "\tbits_per_nt_text=" << shortest(r.s.bits_per_nt_text())
       << "\tbits_per_nt_binary=" << shortest(r.s.bits_per_nt_binary())
       << "\tbits_per_nt_container=" << shortest(r.s.bits_per_nt_container()) << '\n';
  }
  return os.str();
}

int cmd_stats(const Config& cfg, Streams io) {
  const auto records = load_any(cfg.inputs.front(), cfg, io.in);
  std::vector<StatsRow> rows;
  for (const EncodedRecord& r : records) rows.push_back({r.name, stats(r)});
  rows.push_back({"TOTAL", stats(records)});
  write_output(cfg.output.empty() ? "-" : cfg.output,
               cfg.machine_readable ? stats_lines(rows) : stats_table(rows), io.out);
  return kSuccess;
}

unsigned default_threads() {
  const char* env = std::getenv("ICGR_THREADS");
  if (env == nullptr || *env == '\0') return hardware_threads();
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 4096 || env[0] == '-') {
    throw CliError(std::string("ICGR_THREADS must be a positive integer, got '") + env + "'");
  }
  return static_cast<unsigned>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  try {
    cfg.threads = default_threads();
  } catch (const CliError& e) {
    err << "icgr: " << e.what() << '\n';
    return kFailure;
  }

  CLI::App app{"Lossless DNA codec based on the integer chaos game representation", "icgr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "icgr 0.1.0");

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"binary", Format::Binary}};

  auto common = [&](CLI::App* sub, bool blocks) {
    sub->add_option("--threads", cfg.threads, "Worker threads (default: ICGR_THREADS or all cores)")
        ->check(CLI::Range(1u, 4096u));
    if (blocks) {
      sub->add_option("--block-size", cfg.block_size, "Nucleotides per block")
          ->check(CLI::Range(1u, 0xffffffffu))
          ->capture_default_str();
    }
  };

  CLI::App* encode = app.add_subcommand("encode", "FASTA to tri-integer file");
  encode->add_option("input", cfg.inputs, "FASTA file or -")->required()->expected(1);
  encode->add_option("-o,--output", cfg.output, "Output file (default: input + .icgr/.icgr.txt)");
  encode->add_option("--format", cfg.format, "text or binary")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("binary");
  common(encode, true);

  CLI::App* decode = app.add_subcommand("decode", "Tri-integer file to FASTA");
  decode->add_option("input", cfg.inputs, ".icgr or .icgr.txt file, or -")
      ->required()
      ->expected(1);
  decode->add_option("-o,--output", cfg.output, "Output FASTA (default: stdout)");
  common(decode, false);

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "Encode and decode in memory, compare");
  roundtrip->add_option("input", cfg.inputs, "FASTA file or -")->required()->expected(1);
  roundtrip->add_option("-o,--output", cfg.output, "Report file (default: stdout)");
  common(roundtrip, true);

  CLI::App* plot = app.add_subcommand("plot", "Frequency-CGR image per record");
  plot->add_option("input", cfg.inputs, "FASTA file or -")->required()->expected(1);
  plot->add_option("-o,--output", cfg.output, "Output directory (default: .)");
  plot->add_option("--k", cfg.k, "Resolution exponent, image is 2^k pixels wide")
      ->check(CLI::Range(kMinResolution, kMaxResolution))
      ->capture_default_str();
  plot->add_flag("--log-scale", cfg.log_scale, "Logarithmic intensity");
  common(plot, false);

  CLI::App* diff = app.add_subcommand("diff", "List substitutions between two inputs");
  diff->add_option("inputs", cfg.inputs, "Two FASTA or ICGR files")->required()->expected(2);
  diff->add_option("-o,--output", cfg.output, "Report file (default: stdout)");
  common(diff, true);

  CLI::App* stats_cmd = app.add_subcommand("stats", "Storage cost per record");
  stats_cmd->add_option("input", cfg.inputs, "FASTA or ICGR file, or -")->required()->expected(1);
  stats_cmd->add_option("-o,--output", cfg.output, "Report file (default: stdout)");
  stats_cmd->add_flag("--machine-readable", cfg.machine_readable, "key=value lines");
  common(stats_cmd, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kFailure;
  }

  const Streams io{in, out, err};
  try {
    if (*encode) return cmd_encode(cfg, io);
    if (*decode) return cmd_decode(cfg, io);
    if (*roundtrip) return cmd_roundtrip(cfg, io);
    if (*plot) return cmd_plot(cfg, io);
    if (*diff) return cmd_diff(cfg, io);
    if (*stats_cmd) return cmd_stats(cfg, io);
  } catch (const std::exception& e) {
    err << "icgr: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace icgr::cli
