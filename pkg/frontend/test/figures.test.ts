import assert from "node:assert/strict";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { test } from "node:test";

import { SchemaError } from "../src/csv";
import { buildFigure, loglogFit } from "../src/figures";
import { main } from "../src/cli";

const tmp = mkdtempSync(join(tmpdir(), "figures-"));

function trajectoryFixture(path: string, growing: boolean): string {
  const rows = ["t,x,y,theta,phi,xdot,ydot,thetadot,phidot,v_par,v_perp," +
    "tau,lambda1,lambda2,T,R_power,theta_centered"];
  for (let i = 0; i < 400; i += 1) {
    const t = i * 0.01;
    const amp = growing ? 0.1 + 0.05 * t : 0.1;
    const xdot = amp * Math.sin(30 * t);
    rows.push([t, 0.1 * t, 0, 0.02 * Math.sin(15 * t), 0.3 * Math.cos(15 * t),
      xdot, 0, 0, 0, xdot, 0, 0.01, 0.2 * Math.cos(15 * t), 0.1, 0.005, 0.004,
      0.02 * Math.sin(15 * t)].join(","));
  }
  const full = join(tmp, path);
  writeFileSync(full, rows.join("\n") + "\n");
  return full;
}

function sweepFixture(path: string, param: string, values: number[],
                      metrics: (v: number) => Record<string, number>): string {
  const metricNames = Object.keys(metrics(values[0]));
  const rows = [[param, ...metricNames, "error"].join(",")];
  for (const v of values) {
    const m = metrics(v);
    rows.push([v, ...metricNames.map((n) => m[n]), ""].join(","));
  }
  const full = join(tmp, path);
  writeFileSync(full, rows.join("\n") + "\n");
  return full;
}

test("loglog fit is exact on power-law data", () => {
  const x = [0.02, 0.05, 0.1, 0.2];
  const y = x.map((v) => 3.0 * v * v);
  const [slope, intercept] = loglogFit(x, y);
  assert.ok(Math.abs(slope - 2.0) < 1e-12);
  assert.ok(Math.abs(intercept - Math.log(3.0)) < 1e-12);
});

test("fig2 renders a three-panel overlay", () => {
  const damped = trajectoryFixture("damped.csv", false);
  const free = trajectoryFixture("free.csv", true);
  const svg = buildFigure({ id: "fig2", inputs: [damped, free], output: "" });
  assert.match(svg, /^<svg /);
  assert.match(svg, /dissipative/);
  assert.match(svg, /undamped/);
  assert.match(svg, /lambda1/);
});

test("fig2 with one input is a schema error", () => {
  const damped = trajectoryFixture("only.csv", false);
  assert.throws(
    () => buildFigure({ id: "fig2", inputs: [damped], output: "" }),
    /two inputs/,
  );
});

test("fig3 renders the reversal sweep", () => {
  const path = sweepFixture("m0.csv", "physical.m0", [0, 0.5, 1.0, 2.0],
    (v) => ({ mean_speed: v - 0.8, b1: 10 * (v - 0.8) }));
  const svg = buildFigure({ id: "fig3", inputs: [path], output: "" });
  assert.match(svg, /direction reversal/);
});

test("fig4c annotates the fitted slope", () => {
  const path = sweepFixture("eps.csv", "input.eps", [0.02, 0.05, 0.1, 0.2],
    (v) => ({ mean_speed: -2.5 * v * v }));
  const svg = buildFigure({ id: "fig4c", inputs: [path], output: "" });
  const match = svg.match(/slope = ([-0-9.]+)/);
  assert.ok(match, "slope annotation missing");
  assert.ok(Math.abs(Number(match![1]) - 2.0) < 1e-9);
});

test("fig5b overlays numeric and closed-form curvature", () => {
  const path = sweepFixture("phi0.csv", "input.phi0", [0.01, 0.02, 0.04],
    (v) => ({ curvature: 4.4 * v, curvature_asym: 4.37 * v }));
  const svg = buildFigure({ id: "fig5b", inputs: [path], output: "" });
  assert.match(svg, /closed form/);
});

test("fig12 renders the slope sweep", () => {
  const path = sweepFixture("slope.csv", "physical.slope",
    [0, 0.0087, 0.0175], (v) => ({ mean_speed: 0.19 - 26 * v }));
  const svg = buildFigure({ id: "fig12", inputs: [path], output: "" });
  assert.match(svg, /sign reversal/);
});

test("schema mismatch names the missing columns", () => {
  const path = sweepFixture("wrong.csv", "input.eps", [0.1],
    (v) => ({ displacement: v }));
  assert.throws(
    () => buildFigure({ id: "fig4c", inputs: [path], output: "" }),
    /missing columns \[mean_speed\]/,
  );
});

test("rendering is deterministic", () => {
  const path = sweepFixture("det.csv", "input.eps", [0.02, 0.05, 0.1, 0.2],
    (v) => ({ mean_speed: -2.5 * v * v }));
  const a = buildFigure({ id: "fig4c", inputs: [path], output: "" });
  const b = buildFigure({ id: "fig4c", inputs: [path], output: "" });
  assert.equal(a, b);
});

test("cli writes the image and reports usage errors", () => {
  const path = sweepFixture("cli.csv", "input.eps", [0.02, 0.05, 0.1, 0.2],
    (v) => ({ mean_speed: -2.5 * v * v }));
  const out = join(tmp, "fig4c.svg");
  assert.equal(main(["fig4c", "--in", path, "--out", out]), 0);
  assert.match(readFileSync(out, "utf8"), /^<svg /);
  assert.equal(main(["not-a-figure", "--in", path, "--out", out]), 2);
  assert.equal(main(["fig4c", "--in", path]), 2);
});
