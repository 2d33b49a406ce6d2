/** Entry point for the embedded review page.
 *
 * The report page ships with the report JSON in a #report-data script tag
 * and an empty #app container; boot parses the one and mounts the viewer
 * into the other. Everything runs from the single HTML file: no network
 * requests are made (remote media, when configured, is the one exception).
 */

import { ReviewPage } from "./page";
import { parseReport } from "./types";

export function boot(doc: Document = document): ReviewPage | null {
  const holder = doc.getElementById("report-data");
  const app = doc.getElementById("app");
  if (!holder || !app) {
    return null;
  }
  let report;
  try {
    report = parseReport(holder.textContent ?? "");
  } catch (err) {
    app.textContent = `failed to load the embedded report: ${String(err)}`;
    return null;
  }
  const page = new ReviewPage(app, report);
  page.mount();
  return page;
}

if (typeof document !== "undefined") {
  boot();
}
