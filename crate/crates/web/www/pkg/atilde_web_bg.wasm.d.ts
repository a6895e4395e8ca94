/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_quiverexplorer_free: (a: number, b: number) => void;
export const class_summary: (a: number, b: number) => [number, number, number, number];
export const count_table: (a: number) => [number, number, number, number];
export const quiverexplorer_arrows_json: (a: number) => [number, number];
export const quiverexplorer_classify_json: (a: number) => [number, number];
export const quiverexplorer_from_text: (a: number, b: number) => [number, number, number];
export const quiverexplorer_history_json: (a: number) => [number, number];
export const quiverexplorer_mutate: (a: number, b: number) => [number, number];
export const quiverexplorer_new: (a: number, b: number) => [number, number, number];
export const quiverexplorer_to_text: (a: number) => [number, number];
export const quiverexplorer_undo: (a: number) => number;
export const quiverexplorer_vertices: (a: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
