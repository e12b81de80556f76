// Copyright 2026 The Delphi Authors
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

#include "delphi/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstring>
#include <system_error>

extern char** environ;

namespace delphi {

namespace {

void close_fd(int& fd) {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

struct Pipe {
  int fd[2] = {-1, -1};
  Pipe() {
    if (::pipe2(fd, O_CLOEXEC) != 0) throw std::system_error(errno, std::generic_category(), "pipe");
  }
  ~Pipe() {
    close_fd(fd[0]);
    close_fd(fd[1]);
  }
};

}  // namespace

ProcessResult run_process(const std::vector<std::string>& argv, const ProcessOptions& opts) {
  if (argv.empty()) throw std::system_error(EINVAL, std::generic_category(), "empty command");
  static const bool sigpipe_ignored = [] {
    ::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)sigpipe_ignored;
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();

  Pipe in, out, err, status;
  std::vector<std::string> env_storage;
  for (char** e = environ; *e; ++e) {
    std::string kv(*e);
    bool overridden = false;
    for (const auto& [k, _] : opts.env) overridden = overridden || kv.starts_with(k + "=");
    if (!overridden) env_storage.push_back(std::move(kv));
  }
  for (const auto& [k, v] : opts.env) env_storage.push_back(k + "=" + v);
  std::vector<char*> envp;
  for (auto& s : env_storage) envp.push_back(s.data());
  envp.push_back(nullptr);
  std::vector<std::string> args = argv;
  std::vector<char*> cargv;
  for (auto& a : args) cargv.push_back(a.data());
  cargv.push_back(nullptr);

  const pid_t pid = ::fork();
  if (pid < 0) throw std::system_error(errno, std::generic_category(), "fork");
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(in.fd[0], 0);
    ::dup2(out.fd[1], 1);
    ::dup2(err.fd[1], 2);
    ::environ = envp.data();
    ::execvp(cargv[0], cargv.data());
    const int code = errno;
    [[maybe_unused]] auto n = ::write(status.fd[1], &code, sizeof code);
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  close_fd(in.fd[0]);
  close_fd(out.fd[1]);
  close_fd(err.fd[1]);
  close_fd(status.fd[1]);

  int exec_errno = 0;
  if (::read(status.fd[0], &exec_errno, sizeof exec_errno) == sizeof exec_errno) {
    ::waitpid(pid, nullptr, 0);
    throw std::system_error(exec_errno, std::generic_category(), "cannot execute '" + argv[0] + "'");
  }

  ProcessResult r;
  std::size_t written = 0;
  if (opts.stdin_text.empty()) close_fd(in.fd[1]);
  else ::fcntl(in.fd[1], F_SETFL, O_NONBLOCK);

  const auto deadline = opts.timeout ? std::optional(start + *opts.timeout) : std::nullopt;
  char buf[65536];
  while (out.fd[0] >= 0 || err.fd[0] >= 0) {
    pollfd fds[3];
    int n = 0;
    int idx_out = -1, idx_err = -1, idx_in = -1;
    if (out.fd[0] >= 0) fds[idx_out = n++] = {out.fd[0], POLLIN, 0};
    if (err.fd[0] >= 0) fds[idx_err = n++] = {err.fd[0], POLLIN, 0};
    if (in.fd[1] >= 0) fds[idx_in = n++] = {in.fd[1], POLLOUT, 0};
    int wait_ms = -1;
    if (deadline) {
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*deadline - clock::now());
      if (left.count() <= 0) {
        r.timed_out = true;
        break;
      }
      wait_ms = static_cast<int>(std::min<long long>(left.count(), 1000));
    }
    const int rc = ::poll(fds, n, wait_ms);
    if (rc < 0) {
      if (errno == EINTR) continue;
      break;
    }
    auto drain = [&](int idx, int& fd, std::string& into) {
      if (idx < 0 || !(fds[idx].revents & (POLLIN | POLLHUP | POLLERR))) return;
      const ssize_t k = ::read(fd, buf, sizeof buf);
      if (k > 0) into.append(buf, static_cast<std::size_t>(k));
      else if (k == 0 || errno != EINTR) close_fd(fd);
    };
    drain(idx_out, out.fd[0], r.out);
    drain(idx_err, err.fd[0], r.err);
    if (idx_in >= 0 && (fds[idx_in].revents & (POLLOUT | POLLERR | POLLHUP))) {
      const ssize_t k = ::write(in.fd[1], opts.stdin_text.data() + written, opts.stdin_text.size() - written);
      if (k > 0) written += static_cast<std::size_t>(k);
      if (k < 0 && errno != EAGAIN && errno != EINTR) close_fd(in.fd[1]);
      if (written == opts.stdin_text.size()) close_fd(in.fd[1]);
    }
  }
  close_fd(in.fd[1]);

  int wstatus = 0;
  if (r.timed_out) {
    ::kill(-pid, SIGKILL);
    ::waitpid(pid, &wstatus, 0);
  } else {
    for (;;) {
      const pid_t w = ::waitpid(pid, &wstatus, deadline ? WNOHANG : 0);
      if (w == pid) break;
      if (w < 0 && errno != EINTR) break;
      if (w == 0) {
        if (clock::now() >= *deadline) {
          r.timed_out = true;
          ::kill(-pid, SIGKILL);
          ::waitpid(pid, &wstatus, 0);
          break;
        }
        ::usleep(1000);
      }
    }
  }
  if (!r.timed_out) {
    if (WIFEXITED(wstatus)) r.exit_code = WEXITSTATUS(wstatus);
    else if (WIFSIGNALED(wstatus)) r.signal = WTERMSIG(wstatus);
  }
  r.seconds = std::chrono::duration<double>(clock::now() - start).count();
  return r;
}

std::string resolve_executable(const std::string& path, const std::filesystem::path& base_dir) {
  namespace fs = std::filesystem;
  const fs::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  const fs::path local = fs::absolute(base_dir / p).lexically_normal();
  if (path.find('/') != std::string::npos) return local.string();
  std::error_code ec;
  if (fs::is_regular_file(local, ec)) return local.string();
  return path;
}

std::vector<std::string> split_command(std::string_view cmd) {
  std::vector<std::string> out;
  std::string cur;
  bool in_token = false;
  char quote = 0;
  for (char c : cmd) {
    if (quote) {
      if (c == quote) quote = 0;
      else cur += c;
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
      in_token = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (in_token) out.push_back(std::move(cur));
      cur.clear();
      in_token = false;
    } else {
      cur += c;
      in_token = true;
    }
  }
  if (in_token) out.push_back(std::move(cur));
  return out;
}

}  // namespace delphi
