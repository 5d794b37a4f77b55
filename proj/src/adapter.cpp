#include "descent/adapter.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>

#include "descent/error.hpp"
#include "json.hpp"

namespace descent {

namespace {

Integer json_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()), 10);
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<unsigned long long>()), 10);
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const Error&) {
    }
  }
  throw Error(Errc::AdapterProtocolError, "expected an integer, got " + v.dump());
}

struct Fd {
  int fd = -1;
  explicit Fd(int f = -1) : fd(f) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  ~Fd() { reset(); }
  void reset() {
    if (fd >= 0) ::close(fd);
    fd = -1;
  }
};

}  // namespace

AdapterResponse parse_adapter_response(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::AdapterProtocolError, "malformed response '" + std::string(line) + "'");
  }
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw Error(Errc::AdapterProtocolError, "response lacks a points array: " + std::string(line));
  AdapterResponse r;
  for (const auto& pt : j["points"]) {
    if (!pt.is_array() || pt.size() != 2) throw Error(Errc::AdapterProtocolError, "bad point " + pt.dump());
    r.points.emplace_back(json_integer(pt[0]), json_integer(pt[1]));
  }
  if (j.contains("complete")) {
    if (!j["complete"].is_boolean()) throw Error(Errc::AdapterProtocolError, "complete must be a boolean");
    r.complete = j["complete"].get<bool>();
  }
  return r;
}

std::string exchange_with_adapter(const AdapterConfig& config, const std::string& request) {
  if (config.executable.empty()) throw Error(Errc::AdapterUnavailable, "no adapter executable configured");
  if (::access(config.executable.c_str(), X_OK) != 0)
    throw Error(Errc::AdapterUnavailable, "cannot execute " + config.executable);

  int in_pipe[2], out_pipe[2];
  if (::pipe(in_pipe) != 0) throw Error(Errc::AdapterUnavailable, std::strerror(errno));
  if (::pipe(out_pipe) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw Error(Errc::AdapterUnavailable, std::strerror(errno));
  }
  Fd child_in(in_pipe[0]), to_child(in_pipe[1]), from_child(out_pipe[0]), child_out(out_pipe[1]);

  std::vector<std::string> argv_store{config.executable};
  argv_store.insert(argv_store.end(), config.args.begin(), config.args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  argv.push_back(nullptr);

  const pid_t pid = ::fork();
  if (pid < 0) throw Error(Errc::AdapterUnavailable, std::strerror(errno));
  if (pid == 0) {
    ::dup2(child_in.fd, STDIN_FILENO);
    ::dup2(child_out.fd, STDOUT_FILENO);
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    ::close(out_pipe[0]);
    ::close(out_pipe[1]);
    ::execv(config.executable.c_str(), argv.data());
    ::_exit(127);
  }
  child_in.reset();
  child_out.reset();

  auto reap = [&](bool force) {
    int status = 0;
    if (!force && ::waitpid(pid, &status, WNOHANG) == pid) return status;
    ::kill(pid, SIGKILL);
    while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    return status;
  };

  // Requests are one short line; a blocking write is fine.
  ::signal(SIGPIPE, SIG_IGN);
  const std::string payload = request + "\n";
  std::size_t written = 0;
  while (written < payload.size()) {
    ssize_t n = ::write(to_child.fd, payload.data() + written, payload.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      break;
    }
    written += static_cast<std::size_t>(n);
  }
  to_child.reset();

  using clock = std::chrono::steady_clock;
  const auto deadline = clock::now() + std::chrono::duration_cast<clock::duration>(
                                           std::chrono::duration<double>(config.timeout_seconds));
  std::string buffer;
  char chunk[4096];
  while (buffer.find('\n') == std::string::npos) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - clock::now()).count();
    if (left <= 0) {
      reap(true);
      throw Error(Errc::AdapterTimeout, config.executable + " did not answer in time");
    }
    pollfd pfd{from_child.fd, POLLIN, 0};
    int ready = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(left, 1000)));
    if (ready < 0 && errno == EINTR) continue;
    if (ready <= 0) continue;
    ssize_t n = ::read(from_child.fd, chunk, sizeof chunk);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    buffer.append(chunk, static_cast<std::size_t>(n));
  }
  from_child.reset();
  int status = 0;
  if (buffer.empty()) {
    while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
  } else {
    status = reap(false);
  }
  if (WIFEXITED(status) && WEXITSTATUS(status) == 127 && buffer.empty())
    throw Error(Errc::AdapterUnavailable, "failed to start " + config.executable);
  const auto eol = buffer.find('\n');
  if (eol == std::string::npos && buffer.empty())
    throw Error(Errc::AdapterProtocolError, config.executable + " closed without a response");
  return buffer.substr(0, eol);
}

TwistOutcome solve_twist_external(const TwistEquation& t, const AdapterConfig& config) {
  const std::string request = t.canonical_key();
  const AdapterResponse response = parse_adapter_response(exchange_with_adapter(config, request));
  TwistOutcome out;
  out.twist = t;
  out.backend = "external";
  out.complete = response.complete;
  for (const auto& [a, b] : response.points) {
    if (t.kind == TwistKind::elliptic_cubic && mpz_divisible_p(a.get_mpz_t(), t.d.get_mpz_t()))
      out.x_candidates.push_back(a / t.d);
    out.x_candidates.push_back(a);
  }
  out.diagnostics.push_back("adapter " + config.executable + " returned " + std::to_string(response.points.size()) +
                            " point(s)");
  finalize_candidates(out);
  return out;
}

}  // namespace descent
