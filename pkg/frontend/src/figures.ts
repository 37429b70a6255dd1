/** Figure builders over the simulator CLI's published CSV schemas.
 *
 * Each figure id maps to a fixed recipe: which input files it expects, which
 * columns it reads, and how the panels are laid out.  Rendering is read-only
 * over the inputs and fully deterministic.
 */

import { readFileSync } from "node:fs";

import { column, parseCsv, requireColumns, SchemaError, Table } from "./csv";
import { Panel, renderSvg } from "./svg";

export type FigureId = "fig2" | "fig3" | "fig4c" | "fig5b" | "fig12";

export interface FigureSpec {
  id: FigureId;
  inputs: string[];
  output: string;
}

export const FIGURE_IDS: FigureId[] = ["fig2", "fig3", "fig4c", "fig5b", "fig12"];

function loadTable(path: string): Table {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch (err) {
    throw new SchemaError(`cannot read ${path}: ${(err as Error).message}`);
  }
  return parseCsv(text);
}

/** Least-squares line through (ln x, ln |y|); returns [slope, intercept]. */
export function loglogFit(x: number[], y: number[]): [number, number] {
  const lx: number[] = [];
  const ly: number[] = [];
  for (let i = 0; i < x.length; i += 1) {
    if (x[i] > 0 && Math.abs(y[i]) > 0) {
      lx.push(Math.log(x[i]));
      ly.push(Math.log(Math.abs(y[i])));
    }
  }
  const n = lx.length;
  if (n < 2) {
    throw new SchemaError("log-log fit needs at least two positive points");
  }
  const mx = lx.reduce((a, b) => a + b, 0) / n;
  const my = ly.reduce((a, b) => a + b, 0) / n;
  let sxx = 0;
  let sxy = 0;
  for (let i = 0; i < n; i += 1) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  const slope = sxy / sxx;
  return [slope, my - slope * mx];
}

function figTrajectoryOverlay(inputs: string[]): Panel[] {
  if (inputs.length !== 2) {
    throw new SchemaError("fig2 needs two inputs: dissipative and undamped trajectory CSVs");
  }
  const labels = ["dissipative", "undamped"];
  const tables = inputs.map(loadTable);
  tables.forEach((t) => requireColumns(t, ["t", "xdot", "theta_centered", "lambda1"]));

  const speed = new Panel({
    title: "world-frame speed",
    xAxis: { label: "t [s]" },
    yAxis: { label: "xdot [m/s]" },
    zeroLine: true,
  });
  const heading = new Panel({
    title: "orientation about the mean direction",
    xAxis: { label: "t [s]" },
    yAxis: { label: "theta - theta_bar [rad]" },
    zeroLine: true,
  });
  const forces = new Panel({
    title: "lateral constraint force (rear axle)",
    xAxis: { label: "t [s]" },
    yAxis: { label: "lambda1 [N]" },
    zeroLine: true,
  });
  tables.forEach((t, i) => {
    const time = column(t, "t");
    speed.add({ x: time, y: column(t, "xdot"), label: labels[i] });
    heading.add({ x: time, y: column(t, "theta_centered"), label: labels[i] });
    forces.add({ x: time, y: column(t, "lambda1"), label: labels[i] });
  });
  return [speed, heading, forces];
}

function figReversalSweep(inputs: string[]): Panel[] {
  const table = loadTable(inputs[0]);
  requireColumns(table, ["physical.m0", "mean_speed", "b1"]);
  const m0 = column(table, "physical.m0");
  const speed = column(table, "mean_speed");
  const b1 = column(table, "b1");
  const panel = new Panel({
    title: "direction reversal under added mass",
    xAxis: { label: "added point mass m0 [kg]" },
    yAxis: { label: "mean forward speed [m/s]" },
    zeroLine: true,
    annotations: [
      `predicted sign flips at the b1 = 0 crossing ` +
        `(b1: ${b1[0].toPrecision(3)} ... ${b1[b1.length - 1].toPrecision(3)})`,
    ],
  });
  panel.add({ x: m0, y: speed, markers: true, label: "simulated mean speed" });
  return [panel];
}

function figAmplitudeScaling(inputs: string[]): Panel[] {
  const table = loadTable(inputs[0]);
  requireColumns(table, ["input.eps", "mean_speed"]);
  const eps = column(table, "input.eps");
  const speed = column(table, "mean_speed").map(Math.abs);
  const [slope, intercept] = loglogFit(eps, speed);
  const lineX = [Math.min(...eps), Math.max(...eps)];
  const lineY = lineX.map((e) => Math.exp(intercept + slope * Math.log(e)));
  const panel = new Panel({
    title: "steady-state mean speed vs steering amplitude",
    xAxis: { label: "eps [rad]", log: true },
    yAxis: { label: "|mean speed| [m/s]", log: true },
    annotations: [`slope = ${slope.toFixed(6)}`],
  });
  panel.add({ x: eps, y: speed, markers: true, line: false, label: "simulation" });
  panel.add({ x: lineX, y: lineY, dashed: true, label: "least-squares line" });
  return [panel];
}

function figCurvatureLaw(inputs: string[]): Panel[] {
  const table = loadTable(inputs[0]);
  requireColumns(table, ["input.phi0", "curvature", "curvature_asym"]);
  const phi0 = column(table, "input.phi0");
  const panel = new Panel({
    title: "mean-path curvature vs mean steering angle",
    xAxis: { label: "phi0 [rad]" },
    yAxis: { label: "curvature [1/m]" },
    zeroLine: true,
  });
  panel.add({ x: phi0, y: column(table, "curvature"), markers: true,
              line: false, label: "simulation" });
  panel.add({ x: phi0, y: column(table, "curvature_asym"), dashed: true,
              label: "closed form (d1/b1) phi0 / l1" });
  return [panel];
}

function figSlopeSweep(inputs: string[]): Panel[] {
  const table = loadTable(inputs[0]);
  requireColumns(table, ["physical.slope", "mean_speed"]);
  const slope = column(table, "physical.slope");
  const speed = column(table, "mean_speed");
  const panel = new Panel({
    title: "mean forward speed vs ground slope",
    xAxis: { label: "slope [rad]" },
    yAxis: { label: "mean forward speed [m/s]" },
    zeroLine: true,
    annotations: ["sign reversal marks the slope that stalls the vehicle"],
  });
  panel.add({ x: slope, y: speed, markers: true, label: "simulated mean speed" });
  return [panel];
}

export function buildFigure(spec: FigureSpec): string {
  if (spec.inputs.length === 0) {
    throw new SchemaError("no input CSVs given");
  }
  switch (spec.id) {
    case "fig2":
      return renderSvg(figTrajectoryOverlay(spec.inputs), 720, 240);
    case "fig3":
      return renderSvg(figReversalSweep(spec.inputs));
    case "fig4c":
      return renderSvg(figAmplitudeScaling(spec.inputs));
    case "fig5b":
      return renderSvg(figCurvatureLaw(spec.inputs));
    case "fig12":
      return renderSvg(figSlopeSweep(spec.inputs));
    default:
      throw new SchemaError(
        `unknown figure id ${spec.id}; expected one of ${FIGURE_IDS.join(", ")}`,
      );
  }
}
