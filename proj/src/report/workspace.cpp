#include "beliefnet/report/workspace.hpp"

#include <cctype>
#include <cstdio>
#include <unistd.h>

#include "beliefnet/core/error.hpp"
#include "beliefnet/data/csv.hpp"

namespace fs = std::filesystem;

namespace beliefnet::report {

Workspace::Workspace(fs::path root, bool force) : force_(force) {
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec) {
    throw Error(ErrorKind::Workspace, "cannot create '" + root.string() + "': " + ec.message());
  }
  root_ = fs::weakly_canonical(root);
  for (const char* sub : {"data", "models", "strengths", "reports"}) {
    fs::create_directories(root_ / sub, ec);
  }
  lock_ = root_ / kLockFile;
  std::FILE* f = std::fopen(lock_.c_str(), "wx");
  if (f == nullptr) {
    lock_.clear();
    throw Error(ErrorKind::Workspace, "workspace '" + root_.string() +
                                          "' is locked; remove " + kLockFile +
                                          " if no other beliefnet process is running");
  }
  std::fprintf(f, "%ld\n", static_cast<long>(::getpid()));
  std::fclose(f);
}

Workspace::~Workspace() {
  if (!lock_.empty()) {
    std::error_code ec;
    fs::remove(lock_, ec);
  }
}

fs::path Workspace::resolve(const fs::path& relative) const {
  if (relative.is_absolute()) {
    throw Error(ErrorKind::Workspace, "output path '" + relative.string() + "' must be relative");
  }
  const fs::path full = (root_ / relative).lexically_normal();
  const auto rel = full.lexically_relative(root_);
  if (rel.empty() || *rel.begin() == "..") {
    throw Error(ErrorKind::Workspace, "path '" + relative.string() + "' leaves the workspace");
  }
  return full;
}

fs::path Workspace::locate_input(const fs::path& path) const {
  if (path.is_absolute()) return path;
  const fs::path inside = (root_ / path).lexically_normal();
  if (fs::exists(inside)) return inside;
  return fs::absolute(path);
}

void Workspace::check_writable(const fs::path& relative) const {
  const fs::path full = resolve(relative);
  if (!force_ && fs::exists(full)) {
    throw Error(ErrorKind::Workspace,
                "'" + relative.string() + "' exists; pass --force to overwrite");
  }
}

void Workspace::write(const fs::path& relative, std::string_view content) const {
  check_writable(relative);
  const fs::path full = resolve(relative);
  fs::create_directories(full.parent_path());
  csv::write_file(full, content);
}

std::string safe_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-';
    out += ok ? c : '_';
  }
  if (out.empty() || out == "." || out == "..") out = "_" + out;
  return out;
}

}  // namespace beliefnet::report
