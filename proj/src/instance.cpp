#include "jssp/instance.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "jssp/error.hpp"

namespace jssp {

Instance::Instance(std::vector<std::vector<Task>> jobs) {
  if (jobs.empty()) throw ValidationError("instance has no jobs");
  n_jobs_ = static_cast<int>(jobs.size());
  n_machines_ = static_cast<int>(jobs.front().size());
  if (n_machines_ == 0) throw ValidationError("instance has no machines");

  machine_.resize(n_operations());
  duration_.resize(n_operations());
  step_on_.assign(n_operations(), -1);
  for (int k = 0; k < n_jobs_; ++k) {
    if (static_cast<int>(jobs[k].size()) != n_machines_) {
      throw ValidationError("job " + std::to_string(k) + " has " + std::to_string(jobs[k].size()) +
                            " operations, expected " + std::to_string(n_machines_));
    }
    for (int i = 0; i < n_machines_; ++i) {
      const Task& t = jobs[k][i];
      if (t.machine < 0 || t.machine >= n_machines_) {
        throw ValidationError("job " + std::to_string(k) + " step " + std::to_string(i) +
                              ": machine " + std::to_string(t.machine) + " out of range");
      }
      if (t.duration <= 0) {
        throw ValidationError("job " + std::to_string(k) + " step " + std::to_string(i) +
                              ": duration must be positive");
      }
      if (step_on_[k * n_machines_ + t.machine] != -1) {
        throw ValidationError("job " + std::to_string(k) + " visits machine " +
                              std::to_string(t.machine) + " twice");
      }
      step_on_[k * n_machines_ + t.machine] = i;
      machine_[index(k, i)] = t.machine;
      duration_[index(k, i)] = t.duration;
    }
  }
}

Time Instance::job_length(int job) const {
  auto first = duration_.begin() + static_cast<std::ptrdiff_t>(job) * n_machines_;
  return std::accumulate(first, first + n_machines_, Time{0});
}

Time Instance::machine_workload(int machine) const {
  Time total = 0;
  for (int k = 0; k < n_jobs_; ++k) total += duration(k, step_on(k, machine));
  return total;
}

Time Instance::max_duration() const { return *std::max_element(duration_.begin(), duration_.end()); }

std::int64_t Instance::edge_count() const {
  return static_cast<std::int64_t>(n_machines_) * n_jobs_ * (n_jobs_ - 1) / 2;
}

std::vector<std::vector<Task>> Instance::jobs() const {
  std::vector<std::vector<Task>> out(n_jobs_, std::vector<Task>(n_machines_));
  for (int k = 0; k < n_jobs_; ++k)
    for (int i = 0; i < n_machines_; ++i) out[k][i] = {machine(k, i), duration(k, i)};
  return out;
}

double log10_orientation_count(int n_jobs, int n_machines) {
  return static_cast<double>(n_machines) * n_jobs * (n_jobs - 1) / 2.0 * std::log10(2.0);
}

double log10_search_space_size(int n_jobs, int n_machines) {
  return static_cast<double>(n_jobs) * n_machines * (n_machines - 1) / 2.0 * std::log10(2.0);
}

std::uint64_t sequence_count(int n_jobs, int n_machines, std::uint64_t cap) {
  // prod_k C(k*M, M), each binomial built incrementally so every division is exact.
  unsigned __int128 result = 1;
  const unsigned __int128 limit = static_cast<unsigned __int128>(cap) + 1;
  for (int k = 1; k < n_jobs; ++k) {
    unsigned __int128 binom = 1;
    const int total = (k + 1) * n_machines;
    for (int j = 1; j <= n_machines; ++j) {
      binom = binom * (total - n_machines + j) / j;
      if (binom > limit) return cap + 1;
    }
    result *= binom;
    if (result > limit) return cap + 1;
  }
  return static_cast<std::uint64_t>(result);
}

// ---- I/O -------------------------------------------------------------------

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw ValidationError("instance header must be 'N M'");
  if (n <= 0 || m <= 0) throw ValidationError("instance dimensions must be positive");
  std::vector<std::vector<Task>> jobs(n, std::vector<Task>(m));
  for (auto& job : jobs) {
    for (auto& task : job) {
      long long machine = 0, duration = 0;
      if (!(in >> machine >> duration)) throw ValidationError("instance body truncated");
      task = {static_cast<int>(machine), duration};
    }
  }
  std::string extra;
  if (in >> extra) throw ValidationError("unexpected trailing data in instance: '" + extra + "'");
  return Instance(std::move(jobs));
}

Instance parse_instance_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    const int n = doc.at("n_jobs").get<int>();
    const int m = doc.at("n_machines").get<int>();
    const auto& rows = doc.at("jobs");
    if (static_cast<int>(rows.size()) != n) throw ValidationError("jobs array length != n_jobs");
    std::vector<std::vector<Task>> jobs;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m) throw ValidationError("job row length != n_machines");
      auto& job = jobs.emplace_back();
      for (const auto& pair : row) job.push_back({pair.at(0).get<int>(), pair.at(1).get<Time>()});
    }
    return Instance(std::move(jobs));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad instance JSON: ") + e.what());
  }
}

Instance parse_instance(const std::string& text) {
  auto it = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  if (it != text.end() && *it == '{') return parse_instance_json(text);
  return parse_instance_text(text);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string format_instance_text(const Instance& instance) {
  std::ostringstream out;
  out << instance.n_jobs() << ' ' << instance.n_machines() << '\n';
  for (int k = 0; k < instance.n_jobs(); ++k) {
    for (int i = 0; i < instance.n_machines(); ++i) {
      if (i) out << "  ";
      out << instance.machine(k, i) << ' ' << instance.duration(k, i);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_instance_json(const Instance& instance) {
  nlohmann::json jobs = nlohmann::json::array();
  for (int k = 0; k < instance.n_jobs(); ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < instance.n_machines(); ++i)
      row.push_back({instance.machine(k, i), instance.duration(k, i)});
    jobs.push_back(std::move(row));
  }
  nlohmann::json doc = {{"n_jobs", instance.n_jobs()}, {"n_machines", instance.n_machines()}, {"jobs", jobs}};
  return doc.dump();
}

}  // namespace jssp
