#include "gadic/config.hpp"

#include <fstream>
#include <sstream>

#include "gadic/errors.hpp"
#include "text_util.hpp"

namespace gadic {

std::string RunConfig::serialize() const {
  std::ostringstream os;
  os << "sequence = " << seq.to_string() << '\n';
  os << "partition = " << partition.to_string() << '\n';
  os << "t = " << t << '\n';
  os << "window = " << window << '\n';
  os << "budget = " << budget << '\n';
  os << "witnesses = " << witnesses << '\n';
  os << "samples = " << samples << '\n';
  os << "seed = " << seed << '\n';
  return os.str();
}

RunConfig RunConfig::parse(std::string_view text) {
  RunConfig cfg;
  std::size_t line_no = 0;
  for (auto line : detail::split(text, '\n')) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    auto key = detail::trim(line.substr(0, eq));
    auto value = detail::trim(line.substr(eq + 1));
    if (key == "sequence") {
      cfg.seq = GadicSequence::parse(value);
    } else if (key == "partition") {
      cfg.partition = PartitionSpec::parse(value);
    } else if (key == "t") {
      cfg.t = detail::parse_u64(value);
    } else if (key == "window") {
      cfg.window = detail::parse_u64(value);
    } else if (key == "budget") {
      cfg.budget = detail::parse_u64(value);
    } else if (key == "witnesses") {
      cfg.witnesses = detail::parse_u64(value);
    } else if (key == "samples") {
      cfg.samples = detail::parse_u64(value);
    } else if (key == "seed") {
      cfg.seed = detail::parse_u64(value);
    } else {
      throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" +
                       std::string(key) + "'");
    }
  }
  return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

namespace {

std::vector<ClassIndex> runs(std::size_t classes, std::size_t length) {
  std::vector<ClassIndex> out;
  for (ClassIndex c = 0; c < classes; ++c) out.insert(out.end(), length, c);
  return out;
}

}  // namespace

RunConfig RunConfig::preset(std::string_view name) {
  RunConfig cfg;
  if (name == "binary-h2") {
    // defaults: binary quotients, h = 2, period [0,0,1,1], t = 2, K = 20, W = 3
  } else if (name == "six-adic") {
    cfg.seq = GadicSequence({}, {2, 3});
  } else if (name == "cyclic-h3") {
    cfg.partition = PartitionSpec(3, {}, {0, 1, 2});
    cfg.t = 3;
    cfg.budget = 5;
    cfg.witnesses = 2;
  } else if (name == "runs3-h3") {
    cfg.partition = PartitionSpec(3, {}, runs(3, 3));
    cfg.t = 3;
    cfg.budget = 5;
    cfg.witnesses = 2;
  } else if (name == "runs3-h4") {
    cfg.partition = PartitionSpec(4, {}, runs(4, 3));
    cfg.t = 3;
    cfg.budget = 5;
    cfg.witnesses = 2;
  } else if (name == "alternating") {
    cfg.partition = PartitionSpec(2, {}, {0, 1});
  } else {
    throw ParseError("unknown preset '" + std::string(name) + "'");
  }
  return cfg;
}

std::vector<std::string> RunConfig::preset_names() {
  return {"binary-h2", "six-adic", "cyclic-h3", "runs3-h3", "runs3-h4", "alternating"};
}

}  // namespace gadic
