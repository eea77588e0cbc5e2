export {
  RESULT_HEADER,
  TRACE_HEADER,
  parseResultsCsv,
  parseTraceCsv,
  totalYPerTrial,
  type ResultRow,
  type TraceRow,
} from "./csv.js";
export { buildThresholdChart, type ThresholdChartOptions } from "./threshold.js";
export { buildYCdfChart, type YCdfChartOptions } from "./ycdf.js";
export { main } from "./cli.js";
