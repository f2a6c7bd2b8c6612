#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace beliefnet::report {

/// A directory holding data/, models/, strengths/ and reports/.
///
/// Opening a workspace takes an exclusive lock file that is released by the
/// destructor. Relative paths passed to the accessors must stay inside the
/// workspace; existing files are only replaced when `force` is set.
class Workspace {
 public:
  // Creates the directory layout if needed. Throws Workspace when the lock
  // is held by another process.
  Workspace(std::filesystem::path root, bool force);
  ~Workspace();
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const std::filesystem::path& root() const noexcept { return root_; }
  bool force() const noexcept { return force_; }

  // Absolute path of a workspace-relative path; throws Workspace if it
  // escapes the root.
  std::filesystem::path resolve(const std::filesystem::path& relative) const;
  // Resolves an input: absolute paths are used as given, relative ones are
  // tried against the workspace first and then the working directory.
  std::filesystem::path locate_input(const std::filesystem::path& path) const;

  // Throws Workspace if the file exists and force is not set.
  void check_writable(const std::filesystem::path& relative) const;
  // Writes (creating parent directories) after check_writable.
  void write(const std::filesystem::path& relative, std::string_view content) const;

  static constexpr const char* kLockFile = ".beliefnet.lock";

 private:
  std::filesystem::path root_;
  bool force_ = false;
  std::filesystem::path lock_;
};

// Replaces characters outside [A-Za-z0-9._-] with '_' for file names.
std::string safe_name(std::string_view name);

}  // namespace beliefnet::report
