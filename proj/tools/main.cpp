// Copyright 2026 The spanscore Authors
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

// Command-line front end for libspanscore. Everything below goes through
// the public C API; the C++ internals stay behind the shared library.

#include <getopt.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "spanscore.h"

namespace {

constexpr const char* kUsage = R"(usage: spanscore <command> [options]

commands:
  score       score a dataset with the selected measures
  sweep       score across a grid of perturbation levels
  rank        rank the systems found in a dataset
  selfcheck   run the embedded consistency checks

options:
  -i, --input PATH        dataset in JSON-lines form (repeatable)
  -m, --measure NAME      em | mp:<tau> | mpp | approx-w25 | w19 | w23 | w25
                          (repeatable; required for score/sweep/rank)
  -a, --avg NAME          micro | macro (repeatable; default micro)
      --group-by NAME     none | lang_pair | system (default none)
      --pool-groups       make the ALL row pool segments instead of
                          averaging the per-group scores
      --perturb SPEC      extend:<k> | drop:<p>[:<seed>[:<reps>]] |
                          remove-few:<t>
      --sweep LIST        comma-separated grid of perturbation levels
      --one-based-inclusive
                          input offsets are 1-based and inclusive
  -f, --format NAME       csv | tsv | table | svg (default csv)
  -d, --digits N          decimal places for scores (default 4)
  -o, --out PATH          write the report to PATH instead of stdout
  -w, --workers N         worker threads (default 1; output is identical
                          for any value)
      --budget N          matching enumeration budget (default 1048576)
  -h, --help              show this help

exit codes: 0 success, 1 usage error, 2 data error, 3 failed internal check
)";

struct CliArgs {
  std::vector<std::string> inputs;
  std::string measures;   // comma-joined
  std::string averaging;  // comma-joined
  std::string group_by;
  bool pool_groups = false;
  std::string perturb;
  std::string sweep;
  bool one_based = false;
  std::string format = "csv";
  int digits = 4;
  std::string out_path;
  int workers = 1;
  unsigned long long budget = 0;
};

void append_item(std::string& list, const char* item) {
  if (!list.empty()) list += ',';
  list += item;
}

int usage_error(const std::string& message) {
  std::fprintf(stderr, "spanscore: %s\n", message.c_str());
  std::fprintf(stderr, "run \"spanscore --help\" for usage\n");
  return 1;
}

int report_status(spanscore_status status) {
  std::fprintf(stderr, "spanscore: %s\n", spanscore_last_error());
  return static_cast<int>(status);
}

bool parse_int(const char* text, int& value) {
  char* end = nullptr;
  const long v = std::strtol(text, &end, 10);
  if (!text[0] || *end || v < 0 || v > 1000000) return false;
  value = static_cast<int>(v);
  return true;
}

int parse_args(int argc, char** argv, CliArgs& args) {
  enum {
    kOptGroupBy = 256,
    kOptPoolGroups,
    kOptPerturb,
    kOptSweep,
    kOptOneBased,
    kOptBudget,
  };
  static const option kLongOptions[] = {
      {"input", required_argument, nullptr, 'i'},
      {"measure", required_argument, nullptr, 'm'},
      {"avg", required_argument, nullptr, 'a'},
      {"group-by", required_argument, nullptr, kOptGroupBy},
      {"pool-groups", no_argument, nullptr, kOptPoolGroups},
      {"perturb", required_argument, nullptr, kOptPerturb},
      {"sweep", required_argument, nullptr, kOptSweep},
      {"one-based-inclusive", no_argument, nullptr, kOptOneBased},
      {"format", required_argument, nullptr, 'f'},
      {"digits", required_argument, nullptr, 'd'},
      {"out", required_argument, nullptr, 'o'},
      {"workers", required_argument, nullptr, 'w'},
      {"budget", required_argument, nullptr, kOptBudget},
      {"help", no_argument, nullptr, 'h'},
      {nullptr, 0, nullptr, 0},
  };

  opterr = 0;
  int opt = 0;
  while ((opt = getopt_long(argc, argv, "i:m:a:f:d:o:w:h", kLongOptions,
                            nullptr)) != -1) {
    switch (opt) {
      case 'i':
        args.inputs.emplace_back(optarg);
        break;
      case 'm':
        append_item(args.measures, optarg);
        break;
      case 'a':
        append_item(args.averaging, optarg);
        break;
      case kOptGroupBy:
        args.group_by = optarg;
        break;
      case kOptPoolGroups:
        args.pool_groups = true;
        break;
      case kOptPerturb:
        args.perturb = optarg;
        break;
      case kOptSweep:
        args.sweep = optarg;
        break;
      case kOptOneBased:
        args.one_based = true;
        break;
      case 'f':
        args.format = optarg;
        break;
      case 'd':
        if (!parse_int(optarg, args.digits) || args.digits < 1 ||
            args.digits > 18) {
          return usage_error("--digits expects an integer in [1, 18]");
        }
        break;
      case 'o':
        args.out_path = optarg;
        break;
      case 'w':
        if (!parse_int(optarg, args.workers) || args.workers < 1) {
          return usage_error("--workers expects a positive integer");
        }
        break;
      case kOptBudget: {
        char* end = nullptr;
        args.budget = std::strtoull(optarg, &end, 10);
        if (!optarg[0] || *end || args.budget == 0) {
          return usage_error("--budget expects a positive integer");
        }
        break;
      }
      case 'h':
        std::fputs(kUsage, stdout);
        std::exit(0);
      default:
        return usage_error(std::string("unknown or incomplete option \"") +
                           argv[optind - 1] + "\"");
    }
  }
  if (optind < argc) {
    return usage_error(std::string("unexpected argument \"") + argv[optind] +
                       "\"");
  }
  return 0;
}

int write_output(const CliArgs& args, const char* data, size_t length) {
  if (args.out_path.empty()) {
    std::fwrite(data, 1, length, stdout);
    return 0;
  }
  std::FILE* f = std::fopen(args.out_path.c_str(), "wb");
  if (!f) {
    std::fprintf(stderr, "spanscore: cannot open \"%s\" for writing\n",
                 args.out_path.c_str());
    return 2;
  }
  const size_t written = std::fwrite(data, 1, length, f);
  const int close_status = std::fclose(f);
  if (written != length || close_status != 0) {
    std::fprintf(stderr, "spanscore: failed while writing \"%s\"\n",
                 args.out_path.c_str());
    return 2;
  }
  return 0;
}

spanscore_status load_inputs(const CliArgs& args, spanscore_dataset** out) {
  spanscore_dataset* merged = nullptr;
  for (const std::string& path : args.inputs) {
    spanscore_dataset* next = nullptr;
    const spanscore_status status =
        spanscore_dataset_load(path.c_str(), args.one_based ? 1 : 0, &next);
    if (status != SPANSCORE_OK) {
      spanscore_dataset_free(merged);
      return status;
    }
    if (!merged) {
      merged = next;
      continue;
    }
    const spanscore_status merge_status = spanscore_dataset_merge(merged, next);
    spanscore_dataset_free(next);
    if (merge_status != SPANSCORE_OK) {
      spanscore_dataset_free(merged);
      return merge_status;
    }
  }
  *out = merged;
  return SPANSCORE_OK;
}

int run_report_command(const char* command, const CliArgs& args) {
  if (args.inputs.empty()) {
    return usage_error("at least one --input is required");
  }
  if (args.measures.empty()) {
    return usage_error("at least one --measure is required");
  }

  spanscore_dataset* dataset = nullptr;
  spanscore_status status = load_inputs(args, &dataset);
  if (status != SPANSCORE_OK) return report_status(status);

  spanscore_options options{};
  options.measures = args.measures.c_str();
  options.averaging = args.averaging.empty() ? nullptr : args.averaging.c_str();
  options.group_by = args.group_by.empty() ? nullptr : args.group_by.c_str();
  options.pool_groups = args.pool_groups ? 1 : 0;
  options.perturb = args.perturb.empty() ? nullptr : args.perturb.c_str();
  options.sweep = args.sweep.empty() ? nullptr : args.sweep.c_str();
  options.workers = args.workers;
  options.budget = args.budget;

  spanscore_report* report = nullptr;
  if (std::strcmp(command, "score") == 0) {
    status = spanscore_score(dataset, &options, &report);
  } else if (std::strcmp(command, "sweep") == 0) {
    status = spanscore_sweep(dataset, &options, &report);
  } else {
    status = spanscore_rank(dataset, &options, &report);
  }
  spanscore_dataset_free(dataset);
  if (status != SPANSCORE_OK) return report_status(status);

  char* rendered = nullptr;
  size_t length = 0;
  status = spanscore_report_render(report, args.format.c_str(), args.digits,
                                   &rendered, &length);
  spanscore_report_free(report);
  if (status != SPANSCORE_OK) return report_status(status);

  const int exit_code = write_output(args, rendered, length);
  spanscore_buffer_free(rendered);
  return exit_code;
}

int run_selfcheck() {
  char* log = nullptr;
  size_t length = 0;
  int failures = 0;
  const spanscore_status status = spanscore_selfcheck(&log, &length, &failures);
  if (status != SPANSCORE_OK) return report_status(status);
  std::fwrite(log, 1, length, stdout);
  spanscore_buffer_free(log);
  if (failures > 0) {
    std::fprintf(stderr, "spanscore: %d check(s) failed\n", failures);
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fputs(kUsage, stderr);
    return 1;
  }
  const char* command = argv[1];
  if (std::strcmp(command, "-h") == 0 || std::strcmp(command, "--help") == 0) {
    std::fputs(kUsage, stdout);
    return 0;
  }

  CliArgs args;
  const int parse_status = parse_args(argc - 1, argv + 1, args);
  if (parse_status != 0) return parse_status;

  if (std::strcmp(command, "score") == 0 ||
      std::strcmp(command, "sweep") == 0 ||
      std::strcmp(command, "rank") == 0) {
    return run_report_command(command, args);
  }
  if (std::strcmp(command, "selfcheck") == 0) {
    return run_selfcheck();
  }
  return usage_error(std::string("unknown command \"") + command + "\"");
}
