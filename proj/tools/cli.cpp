// Copyright 2026 The HeartSpot Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "heartspot/heartspot.hpp"

namespace heartspot::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Thrown for invalid flag combinations discovered after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError("invalid " + std::string(what) + ": '" +
                     std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string method_slug(Method m) {
  std::string slug(method_name(m));
  std::replace(slug.begin(), slug.end(), '+', '_');
  return slug;
}

// --- configuration -------------------------------------------------------

// Keys shared by flags (as --key) and config files (as key=value).
const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "method", "seed", "crop", "heart-mask", "n-lines", "hline-range",
      "mp",     "jobs", "out",  "format"};
  return keys;
}

void apply_setting(RunConfig& cfg, const std::string& key,
                   const std::string& value) {
  if (key == "method") {
    const auto m = parse_method(value);
    if (!m) throw UsageError("unknown method '" + value + "'");
    cfg.method = *m;
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(value, "seed");
  } else if (key == "crop") {
    cfg.crop_side = parse_number<std::size_t>(value, "crop");
    if (cfg.crop_side == 0) throw UsageError("--crop must be positive");
  } else if (key == "heart-mask") {
    cfg.heart_mask_path = fs::path(value);
  } else if (key == "n-lines") {
    cfg.n_lines = parse_number<std::size_t>(value, "n-lines");
    if (cfg.n_lines == 0) throw UsageError("--n-lines must be positive");
  } else if (key == "hline-range") {
    try {
      cfg.hline_range = parse_hline_range(value);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  } else if (key == "mp") {
    try {
      cfg.mp = parse_mp(value);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  } else if (key == "jobs") {
    cfg.jobs = parse_number<std::size_t>(value, "jobs");
    if (cfg.jobs == 0) throw UsageError("--jobs must be positive");
  } else if (key == "out") {
    cfg.output_dir = fs::path(value);
  } else if (key == "format") {
    if (value == "json") {
      cfg.format = OutputFormat::kJson;
    } else if (value == "text") {
      cfg.format = OutputFormat::kText;
    } else {
      throw UsageError("--format must be json or text");
    }
  } else {
    throw UsageError("unknown setting '" + key + "'");
  }
}

std::vector<std::pair<std::string, std::string>> read_config_file(
    const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path.string() + ":" + std::to_string(lineno) +
                       ": expected key=value");
    }
    std::string key = trim(std::string_view(text).substr(0, eq));
    if (!known_keys().count(key)) {
      throw UsageError(path.string() + ":" + std::to_string(lineno) +
                       ": unknown key '" + key + "'");
    }
    entries.emplace_back(std::move(key),
                         trim(std::string_view(text).substr(eq + 1)));
  }
  return entries;
}

struct FlagValues {
  std::map<std::string, std::string> values;
  std::string config_path;
};

void add_flags(CLI::App* sub, FlagValues& flags,
               std::initializer_list<std::string> keys) {
  static const std::map<std::string, std::string> help = {
      {"method",
       "hline | rline | heart | lines+heart | mp+lines+heart | mp+hline"},
      {"seed", "random-line seed (falls back to $HEARTSPOT_SEED)"},
      {"crop", "centre-crop side in pixels (default 320)"},
      {"heart-mask", "heart mask PNG or averaged saliency PNG"},
      {"n-lines", "number of random lines (default 200)"},
      {"hline-range", "START:STOP:STEP rows, stop exclusive"},
      {"mp", "median pool K:S (default 12:2)"},
      {"jobs", "worker threads"},
      {"out", "output directory"},
      {"format", "json | text"},
  };
  for (const std::string& key : keys) {
    sub->add_option_function<std::string>(
        "--" + key,
        [&flags, key](const std::string& v) { flags.values[key] = v; },
        help.at(key));
  }
  sub->add_option("--config", flags.config_path,
                  "key=value settings file (overridden by flags)");
}

RunConfig resolve_config(const FlagValues& flags) {
  RunConfig cfg;
  if (const char* env = std::getenv("HEARTSPOT_SEED"); env && *env) {
    cfg.seed = parse_number<std::uint64_t>(env, "HEARTSPOT_SEED");
  }
  if (!flags.config_path.empty()) {
    for (const auto& [k, v] : read_config_file(flags.config_path)) {
      apply_setting(cfg, k, v);
    }
  }
  // --mp is only meaningful for methods that median-pool; checked on flags
  // alone so a shared config file may carry it.
  for (const auto& [k, v] : flags.values) apply_setting(cfg, k, v);
  if (flags.values.count("mp") && !cfg.uses_mp()) {
    throw UsageError("--mp requires an mp+ method");
  }
  return cfg;
}

void require_heart_path(const RunConfig& cfg) {
  if (cfg.uses_heart() && !cfg.heart_mask_path) {
    throw UsageError("method " + std::string(method_name(cfg.method)) +
                     " requires --heart-mask");
  }
}

std::optional<HeartReference> load_heart(const RunConfig& cfg) {
  if (!cfg.heart_mask_path) return std::nullopt;
  return HeartReference::load(*cfg.heart_mask_path);
}

// Encoding commands ignore a heart mask the method does not use, so one
// config file can serve every method.
std::optional<HeartReference> load_heart_for_method(const RunConfig& cfg) {
  return cfg.uses_heart() ? load_heart(cfg) : std::nullopt;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot create " + dir.string());
}

void write_json(const fs::path& path, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                             text.size()));
}

// --- mask ------------------------------------------------------------------

int cmd_mask(const RunConfig& cfg, std::ostream& out) {
  require_heart_path(cfg);
  const auto heart = load_heart_for_method(cfg);
  const PriorSpec spec = cfg.prior_spec(heart ? &*heart : nullptr);
  const BinaryMask mask = packet_mask(spec, heart ? &*heart : nullptr);
  const Ratio ratio = imr(mask, cfg.original_pixels());

  ensure_dir(cfg.output_dir);
  const std::string slug = method_slug(cfg.method);
  const fs::path png = cfg.output_dir / (slug + "_mask.png");
  const fs::path sidecar = cfg.output_dir / (slug + "_mask.json");
  write_file(png, encode_png(mask.to_image()));

  json doc;
  doc["method"] = method_name(cfg.method);
  doc["height"] = mask.height();
  doc["width"] = mask.width();
  doc["popcount"] = mask.popcount();
  doc["original_pixels"] = cfg.original_pixels();
  doc["imr"] = ratio.value();
  doc["seed"] = spec.use_rline ? spec.seed : 0;
  if (spec.use_heart) doc["heart_sha256"] = to_hex(spec.heart_hash);
  write_json(sidecar, doc);

  if (cfg.format == OutputFormat::kJson) {
    out << doc.dump(2) << "\n";
  } else {
    out << png.string() << ": " << mask.popcount() << " pixels, imr "
        << ratio.str() << "\n";
  }
  return kOk;
}

// --- compress --------------------------------------------------------------

struct FileResult {
  std::string name;
  std::optional<Error> error;
  std::size_t popcount = 0;
  Ratio imr_ratio;
  Ratio odr_ratio;
  std::size_t bytes_in = 0;
  std::size_t jpeg_bytes = 0;
  std::size_t bytes_out = 0;
};

bool is_image_file(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

std::vector<fs::path> collect_inputs(const fs::path& input) {
  if (!fs::exists(input)) {
    throw Error(ErrorKind::kIo, "no such file or directory: " + input.string());
  }
  if (!fs::is_directory(input)) return {input};
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(input)) {
    if (entry.is_regular_file() && is_image_file(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::set<std::string> stems;
  for (const auto& f : files) {
    if (!stems.insert(f.stem().string()).second) {
      throw UsageError("two inputs share the stem '" + f.stem().string() +
                       "'; packets would collide");
    }
  }
  return files;
}

FileResult compress_one(const fs::path& input, const RunConfig& cfg,
                        const PriorSpec& spec, const HeartReference* heart,
                        std::size_t popcount) {
  FileResult result;
  result.name = input.filename().string();
  try {
    const Bytes raw = read_file(input);
    result.bytes_in = raw.size();
    const Image8 crop = center_crop(decode_image(raw), cfg.crop_side);
    const Bytes packet = encode_packet(crop, spec, heart);
    const Bytes jpeg = encode_jpeg(crop, 95);
    write_file(cfg.output_dir / (input.stem().string() + ".hspt"), packet);
    result.popcount = popcount;
    result.imr_ratio = {result.popcount, cfg.original_pixels()};
    result.odr_ratio = odr(packet.size(), jpeg.size());
    result.jpeg_bytes = jpeg.size();
    result.bytes_out = packet.size();
  } catch (const Error& e) {
    result.error = e;
  }
  return result;
}

int cmd_compress(const fs::path& input, const RunConfig& cfg,
                 std::ostream& out, std::ostream& err) {
  require_heart_path(cfg);
  const auto heart = load_heart_for_method(cfg);
  const HeartReference* heart_ptr = heart ? &*heart : nullptr;
  const PriorSpec spec = cfg.prior_spec(heart_ptr);
  const std::size_t popcount = packet_mask(spec, heart_ptr).popcount();
  const std::vector<fs::path> inputs = collect_inputs(input);
  if (inputs.empty()) throw UsageError("no PNG/JPEG inputs in " + input.string());
  ensure_dir(cfg.output_dir);

  std::vector<FileResult> results(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      results[i] = compress_one(inputs[i], cfg, spec, heart_ptr, popcount);
    }
  };
  {
    const std::size_t n_workers = std::min(cfg.jobs, inputs.size());
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_workers; ++t) pool.emplace_back(worker);
    worker();
  }  // join barrier

  json files = json::array();
  double imr_sum = 0.0, odr_sum = 0.0;
  std::size_t ok = 0, in_sum = 0, out_sum = 0;
  int code = kOk;
  for (const FileResult& r : results) {
    json entry;
    entry["file"] = r.name;
    if (r.error) {
      entry["error"] = r.error->what();
      err << r.name << ": " << r.error->what() << "\n";
      if (code == kOk) code = exit_code_for(r.error->kind());
    } else {
      entry["popcount"] = r.popcount;
      entry["imr"] = r.imr_ratio.value();
      entry["odr"] = r.odr_ratio.value();
      entry["bytes_in"] = r.bytes_in;
      entry["jpeg95_bytes"] = r.jpeg_bytes;
      entry["bytes_out"] = r.bytes_out;
      imr_sum += r.imr_ratio.value();
      odr_sum += r.odr_ratio.value();
      in_sum += r.bytes_in;
      out_sum += r.bytes_out;
      ++ok;
    }
    files.push_back(std::move(entry));
  }
  json doc;
  doc["method"] = method_name(cfg.method);
  doc["files"] = std::move(files);
  json agg;
  agg["count"] = ok;
  agg["failures"] = results.size() - ok;
  agg["imr"] = ok ? imr_sum / ok : 0.0;
  agg["odr"] = ok ? odr_sum / ok : 0.0;
  agg["bytes_in"] = in_sum;
  agg["bytes_out"] = out_sum;
  doc["aggregate"] = agg;
  write_json(cfg.output_dir / "stats.json", doc);

  if (cfg.format == OutputFormat::kJson) {
    out << doc.dump(2) << "\n";
  } else {
    for (const FileResult& r : results) {
      if (r.error) continue;
      out << r.name << "  imr " << r.imr_ratio.str() << "  odr "
          << r.odr_ratio.str() << "  " << r.bytes_out << " bytes\n";
    }
    char line[96];
    std::snprintf(line, sizeof(line), "mean over %zu file(s): imr %.4f  odr %.4f\n",
                  ok, ok ? imr_sum / ok : 0.0, ok ? odr_sum / ok : 0.0);
    out << line;
  }
  return code;
}

// --- decompress / explain --------------------------------------------------

int cmd_decompress(const fs::path& packet_path, const RunConfig& cfg,
                   std::ostream& out) {
  const auto heart = load_heart(cfg);
  const Bytes bytes = read_file(packet_path);
  const DecodedPacket decoded = decode_packet(bytes, heart ? &*heart : nullptr);
  ensure_dir(cfg.output_dir);
  const fs::path dest = cfg.output_dir / (packet_path.stem().string() + ".png");
  write_file(dest, encode_png(decoded.sparse));
  if (cfg.format == OutputFormat::kJson) {
    json doc;
    doc["output"] = dest.string();
    doc["height"] = decoded.sparse.height();
    doc["width"] = decoded.sparse.width();
    doc["popcount"] = decoded.mask.popcount();
    out << doc.dump(2) << "\n";
  } else {
    out << dest.string() << ": " << decoded.sparse.height() << "x"
        << decoded.sparse.width() << ", " << decoded.mask.popcount()
        << " sampled pixels\n";
  }
  return kOk;
}

int cmd_explain(const fs::path& packet_path, const fs::path& attr_path,
                const RunConfig& cfg, std::ostream& out) {
  const auto heart = load_heart(cfg);
  // Only the header is needed: the mask is regenerated from the recipe.
  const PacketHeader header = read_packet_header(read_file(packet_path));
  const BinaryMask mask = packet_mask(header.spec, heart ? &*heart : nullptr);
  const AttributionVector attr = AttributionVector::load(attr_path);
  if (attr.size() != mask.popcount()) {
    throw Error(ErrorKind::kShape,
                "attribution length mismatch: expected " +
                    std::to_string(mask.popcount()) + ", got " +
                    std::to_string(attr.size()));
  }
  const ImageF smoothed = smooth_attribution(attribution_to_image(attr, mask));
  ensure_dir(cfg.output_dir);
  const fs::path dest =
      cfg.output_dir / (packet_path.stem().string() + "_saliency.png");
  write_file(dest, render_heatmap(smoothed));
  out << dest.string() << "\n";
  return kOk;
}

// --- stats -----------------------------------------------------------------

int cmd_stats(const fs::path& input, const RunConfig& base, std::ostream& out) {
  const Image8 crop = center_crop(decode_image(read_file(input)),
                                  base.crop_side);
  const HeartReference heart =
      base.heart_mask_path
          ? HeartReference::load(*base.heart_mask_path)
          : HeartReference::from_file_bytes(synthetic_heart_png());
  const Bytes jpeg = encode_jpeg(crop, 95);

  struct Row {
    std::string label;
    Ratio imr_ratio;
    Ratio odr_ratio;
  };
  std::vector<Row> rows;
  const std::pair<const char*, Method> table[] = {
      {"HLine", Method::kHline},
      {"RLine", Method::kRline},
      {"Heart", Method::kHeart},
      {"(RH)Line+Heart", Method::kLinesHeart},
      {"MP+(RH)Line+Heart", Method::kMpLinesHeart},
      {"MP+HLine", Method::kMpHline},
  };
  for (const auto& [label, method] : table) {
    RunConfig cfg = base;
    cfg.method = method;
    cfg.hline_range.reset();
    const HeartReference* h = cfg.uses_heart() ? &heart : nullptr;
    const PriorSpec spec = cfg.prior_spec(h);
    const BinaryMask mask = packet_mask(spec, h);
    Row row{label, imr(mask, cfg.original_pixels()), {}};
    if (method == Method::kHeart) {
      row.odr_ratio = odr(encode_masked_jpeg(crop, mask, 95).size(), jpeg.size());
    } else {
      row.odr_ratio = odr(encode_packet(crop, spec, h).size(), jpeg.size());
    }
    rows.push_back(std::move(row));
  }

  if (base.format == OutputFormat::kJson) {
    json doc;
    doc["image"] = input.filename().string();
    doc["jpeg95_bytes"] = jpeg.size();
    json arr = json::array();
    for (const Row& r : rows) {
      json entry;
      entry["method"] = r.label;
      entry["imr"] = r.imr_ratio.rounded(4);
      entry["odr"] = r.odr_ratio.rounded(4);
      entry["popcount"] = r.imr_ratio.numerator;
      entry["bytes"] = r.odr_ratio.numerator;
      arr.push_back(std::move(entry));
    }
    doc["rows"] = std::move(arr);
    out << doc.dump(2) << "\n";
  } else {
    char line[128];
    std::snprintf(line, sizeof(line), "%-20s %8s %8s\n", "method", "IMR", "ODR");
    out << line;
    for (const Row& r : rows) {
      std::snprintf(line, sizeof(line), "%-20s %8s %8s\n", r.label.c_str(),
                    r.imr_ratio.str().c_str(), r.odr_ratio.str().c_str());
      out << line;
    }
  }
  return kOk;
}

// --- helpers for producing test inputs ---------------------------------------

int cmd_phantom(std::size_t count, std::size_t size, const RunConfig& cfg,
                std::ostream& out) {
  ensure_dir(cfg.output_dir);
  for (std::size_t i = 0; i < count; ++i) {
    char name[48];
    std::snprintf(name, sizeof(name), "phantom_%03zu.png", i);
    write_file(cfg.output_dir / name,
               encode_png(xray_phantom(cfg.seed + i, size, size)));
  }
  out << "wrote " << count << " phantom(s) to " << cfg.output_dir.string()
      << "\n";
  return kOk;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return kUsage;
    case ErrorKind::kIntegrity: return kIntegrity;
    case ErrorKind::kFormat: return kFormat;
    case ErrorKind::kShape:
    case ErrorKind::kDimension: return kShape;
    case ErrorKind::kCorruption: return kCorruption;
    default: return kFailure;
  }
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kHline: return "hline";
    case Method::kRline: return "rline";
    case Method::kHeart: return "heart";
    case Method::kLinesHeart: return "lines+heart";
    case Method::kMpLinesHeart: return "mp+lines+heart";
    case Method::kMpHline: return "mp+hline";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::kHline, Method::kRline, Method::kHeart,
                   Method::kLinesHeart, Method::kMpLinesHeart,
                   Method::kMpHline}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

bool RunConfig::uses_hline() const {
  return method == Method::kHline || method == Method::kLinesHeart ||
         method == Method::kMpLinesHeart || method == Method::kMpHline;
}
bool RunConfig::uses_rline() const {
  return method == Method::kRline || method == Method::kLinesHeart ||
         method == Method::kMpLinesHeart;
}
bool RunConfig::uses_heart() const {
  return method == Method::kHeart || method == Method::kLinesHeart ||
         method == Method::kMpLinesHeart;
}
bool RunConfig::uses_mp() const {
  return method == Method::kMpLinesHeart || method == Method::kMpHline;
}

HlineRange RunConfig::effective_hline_range() const {
  if (hline_range) return *hline_range;
  return uses_mp() ? HlineRange{50, 150, 5} : HlineRange{100, 300, 10};
}

std::size_t RunConfig::grid_side() const {
  return uses_mp() ? pooled_extent(crop_side, mp.stride) : crop_side;
}

PriorSpec RunConfig::prior_spec(const HeartReference* heart) const {
  PriorSpec spec;
  spec.height = spec.width = grid_side();
  if (uses_hline()) {
    const HlineRange r = effective_hline_range();
    spec.use_hline = true;
    spec.hline_start = r.start;
    spec.hline_stop = r.stop;
    spec.hline_step = r.step;
  }
  if (uses_rline()) {
    spec.use_rline = true;
    spec.n_lines = n_lines;
    spec.seed = seed;
    spec.rng_id = static_cast<std::uint8_t>(RngId::kPcg32);
  }
  if (uses_heart()) {
    if (heart == nullptr) {
      throw Error(ErrorKind::kIntegrity, "heart method needs a heart mask");
    }
    spec.use_heart = true;
    spec.heart_hash = heart->digest;
  }
  if (uses_mp()) spec.mp = PoolSpec::median(mp.kernel, mp.stride);
  spec.validate();
  return spec;
}

HlineRange parse_hline_range(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "hline range must be START:STOP:STEP");
  }
  try {
    HlineRange r{parse_number<std::size_t>(parts[0], "hline start"),
                 parse_number<std::size_t>(parts[1], "hline stop"),
                 parse_number<std::size_t>(parts[2], "hline step")};
    if (r.step == 0 || r.start >= r.stop) {
      throw Error(ErrorKind::kInvalidArgument,
                  "hline range needs start < stop and step > 0");
    }
    return r;
  } catch (const UsageError& e) {
    throw Error(ErrorKind::kInvalidArgument, e.what());
  }
}

MedianPoolParams parse_mp(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) {
    throw Error(ErrorKind::kInvalidArgument, "median pool must be K:S");
  }
  try {
    MedianPoolParams p{parse_number<std::size_t>(parts[0], "mp kernel"),
                       parse_number<std::size_t>(parts[1], "mp stride")};
    if (p.kernel == 0 || p.stride == 0 || p.kernel > 255 || p.stride > 255) {
      throw Error(ErrorKind::kInvalidArgument,
                  "median pool K and S must be in 1..255");
    }
    return p;
  } catch (const UsageError& e) {
    throw Error(ErrorKind::kInvalidArgument, e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"heartspot: privacy-preserving chest X-ray pixel sampling"};
  app.name(args.empty() ? "heartspot" : args.front());
  app.require_subcommand(1);

  FlagValues flags;
  std::string input, packet, attribution;
  std::size_t phantom_count = 20, phantom_size = 320;

  auto* mask = app.add_subcommand("mask", "write a prior mask PNG and sidecar");
  add_flags(mask, flags, {"method", "seed", "crop", "heart-mask", "n-lines",
                          "hline-range", "mp", "out", "format"});

  auto* compress = app.add_subcommand("compress", "encode images to .hspt");
  compress->add_option("input", input, "image file or directory")->required();
  add_flags(compress, flags,
            {"method", "seed", "crop", "heart-mask", "n-lines", "hline-range",
             "mp", "jobs", "out", "format"});

  auto* decompress =
      app.add_subcommand("decompress", "rebuild the sparse image of a packet");
  decompress->add_option("packet", packet, ".hspt file")->required();
  add_flags(decompress, flags, {"heart-mask", "out", "format"});

  auto* explain = app.add_subcommand(
      "explain", "render an attribution vector without the original image");
  explain->add_option("packet", packet, ".hspt file")->required();
  explain->add_option("attribution", attribution, "little-endian .f32 file")
      ->required();
  add_flags(explain, flags, {"heart-mask", "out"});

  auto* stats =
      app.add_subcommand("stats", "IMR/ODR of every prior on one image");
  stats->add_option("input", input, "image file")->required();
  add_flags(stats, flags,
            {"seed", "crop", "heart-mask", "n-lines", "format"});

  auto* phantom =
      app.add_subcommand("phantom", "write synthetic chest X-ray phantoms");
  phantom->add_option("--count", phantom_count, "number of images");
  phantom->add_option("--size", phantom_size, "side length in pixels");
  add_flags(phantom, flags, {"seed", "out"});

  auto* heart_ref = app.add_subcommand(
      "heart-reference", "write the synthetic averaged-saliency heart PNG");
  add_flags(heart_ref, flags, {"out"});

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const RunConfig cfg = resolve_config(flags);
    if (mask->parsed()) return cmd_mask(cfg, out);
    if (compress->parsed()) return cmd_compress(input, cfg, out, err);
    if (decompress->parsed()) return cmd_decompress(packet, cfg, out);
    if (explain->parsed()) return cmd_explain(packet, attribution, cfg, out);
    if (stats->parsed()) return cmd_stats(input, cfg, out);
    if (phantom->parsed()) {
      return cmd_phantom(phantom_count, phantom_size, cfg, out);
    }
    if (heart_ref->parsed()) {
      ensure_dir(cfg.output_dir);
      const fs::path dest = cfg.output_dir / "heart_reference.png";
      write_file(dest, synthetic_heart_png());
      out << dest.string() << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace heartspot::cli
